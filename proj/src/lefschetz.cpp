#include "braidlef/lefschetz.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "braidlef/errors.hpp"
#include "braidlef/fox.hpp"

namespace braidlef {

FreeWord c_word(long long j, int n) {
  if (j < 0) throw UsageError("c_word: j must be nonnegative");
  FreeWord w(n, Basis::a);
  if (j % 2 == 0) {
    w.append(2, j / 2);
  } else {
    w.append(1, 1);
    w.append(2, (j - 1) / 2);
  }
  return w;
}

RingElem g_elem(long long j, int n) {
  return RingElem::from_word(c_word(j, n), j % 2 == 0 ? -1 : 1);
}

RingElem g_sum(long long lo, long long hi, int n) {
  RingElem s = RingElem::zero(n);
  for (long long j = lo; j <= hi; ++j) s += g_elem(j, n);
  return s;
}

std::string block_str(const Block& b) {
  std::ostringstream out;
  if (b.p == b.q) {
    out << "(" << b.p << ")";
  } else {
    out << "[" << b.p << "," << b.q << "]";
  }
  return out.str();
}

std::string partition_str(const Partition& part) {
  std::ostringstream out;
  out << "{";
  for (std::size_t r = 0; r < part.blocks.size(); ++r) {
    if (r) out << ",";
    out << block_str(part.blocks[r]);
  }
  out << "}";
  return out.str();
}

namespace {

// Order: partitions containing a wraparound block first, sorted by that
// block's start, then lexicographic by (p, q) pairs.
bool partition_less(const Partition& a, const Partition& b) {
  auto wrap_key = [](const Partition& part) {
    for (const Block& blk : part.blocks)
      if (blk.wraps()) return std::pair<int, int>(0, blk.p);
    return std::pair<int, int>(1, 0);
  };
  const auto ka = wrap_key(a);
  const auto kb = wrap_key(b);
  if (ka != kb) return ka < kb;
  std::vector<std::pair<int, int>> pa, pb;
  for (const Block& blk : a.blocks) pa.emplace_back(blk.p, blk.q);
  for (const Block& blk : b.blocks) pb.emplace_back(blk.p, blk.q);
  return pa < pb;
}

}  // namespace

std::vector<Partition> enumerate_partitions_capped(int d, int cap) {
  if (d < 1) throw UsageError("enumerate_partitions: d must be positive");
  if (cap < 1) throw UsageError("enumerate_partitions: cap must be positive");
  if (d > 24) throw UsageError("enumerate_partitions: d too large to enumerate");
  std::vector<Partition> out;
  // A partition is determined by the nonempty set of block starts; the arc
  // from one start to the next (cyclically) is a block, and the block
  // crossing the d -> 1 seam is the unique wraparound one.
  const std::uint32_t full = (1u << d) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::vector<int> cuts;
    for (int v = 1; v <= d; ++v)
      if (mask & (1u << (v - 1))) cuts.push_back(v);
    Partition part;
    bool ok = true;
    const std::size_t s = cuts.size();
    for (std::size_t r = 0; r < s; ++r) {
      Block blk;
      blk.d = d;
      blk.p = cuts[r];
      blk.q = r + 1 < s ? cuts[r + 1] - 1 : (cuts[0] == 1 ? d : cuts[0] - 1);
      if (blk.length() > cap) {
        ok = false;
        break;
      }
      part.blocks.push_back(blk);
    }
    if (ok) out.push_back(std::move(part));
  }
  std::sort(out.begin(), out.end(), partition_less);
  return out;
}

std::vector<Partition> enumerate_partitions(int d, int n) {
  if (n < 3) throw UsageError("enumerate_partitions: n must be at least 3");
  return enumerate_partitions_capped(d, n - 1);
}

std::vector<Partition> enumerate_partitions_prime(int d, int n) {
  std::vector<Partition> out;
  for (Partition& part : enumerate_partitions(d, n)) {
    const std::size_t s = part.blocks.size();
    bool ok = true;
    for (std::size_t r = 0; r < s; ++r) {
      const int len = part.blocks[r].length();
      const int next_len = part.blocks[(r + 1) % s].length();
      if (len == 1 && next_len == n - 2) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(std::move(part));
  }
  return out;
}

namespace {

std::vector<long long> suffix_of(const std::vector<long long>& I, int l) {
  return std::vector<long long>(I.begin() + (l - 1), I.end());
}

void check_sequence(const std::vector<long long>& I, const char* where) {
  if (I.empty()) throw UsageError(std::string(where) + ": empty exponent sequence");
  for (long long i : I)
    if (i < 1) throw UsageError(std::string(where) + ": exponents must be positive");
}

}  // namespace

std::pair<BraidWord, BraidWord> alpha_omega(const Block& b,
                                            const std::vector<long long>& I,
                                            int n) {
  check_sequence(I, "alpha_omega");
  const int d = static_cast<int>(I.size());
  if (b.d != d || b.p < 1 || b.p > d || b.q < 1 || b.q > d)
    throw UsageError("alpha_omega: block does not fit the sequence");
  BraidWord alpha = beta_seq(suffix_of(I, b.p), n);
  BraidWord omega = beta_seq(suffix_of(I, b.q), n);
  if (b.wraps()) omega = compose(omega, inverse(beta_seq(I, n)));
  return {std::move(alpha), std::move(omega)};
}

RingElem w_block(const std::vector<long long>& I, const Block& b, int n) {
  const int len = b.length();
  if (len > n - 1) throw UsageError("w_block: block longer than n-1");
  const long long ip = I[static_cast<std::size_t>(b.p - 1)];
  const auto [alpha, omega] = alpha_omega(b, I, n);
  if (len < n - 1) {
    if (ip == 1) return RingElem::zero(n);
    return apply_aut(g_sum(0, ip - 2, n), alpha) *
           RingElem::from_word(act(omega, FreeWord::generator(n, Basis::a, len + 1)));
  }
  return apply_aut(g_elem(ip, n), alpha) *
         RingElem::from_word(act(omega, FreeWord::generator(n, Basis::a, n - 1)));
}

RingElem w_partition(const std::vector<long long>& I, const Partition& part,
                     int n) {
  RingElem prod = RingElem::one(n);
  for (const Block& blk : part.blocks) {
    prod *= w_block(I, blk, n);
    if (prod.is_zero()) break;
  }
  return prod;
}

LefschetzResult theorem1(const NormalForm& nf) {
  const int n = nf.n;
  if (n < 3) throw UsageError("theorem1: n must be at least 3");
  if (nf.central_only || nf.I.empty())
    throw UsageError(
        "theorem1: the braid is a pure full-twist power; the partition "
        "formula needs a nonempty exponent sequence");
  check_sequence(nf.I, "theorem1");
  const std::vector<long long>& I = nf.I;
  const int d = static_cast<int>(I.size());

  // The twisting braids repeat across partitions, so the twisted heads and
  // tails are computed once per index.
  std::vector<BraidWord> suffix(static_cast<std::size_t>(d) + 2);
  for (int l = 1; l <= d + 1; ++l) suffix[l] = beta_seq(suffix_of(I, l), n);
  const BraidWord whole_inv = inverse(suffix[1]);

  std::vector<RingElem> head_short(static_cast<std::size_t>(d) + 1);
  std::vector<RingElem> head_full(static_cast<std::size_t>(d) + 1);
  for (int p = 1; p <= d; ++p) {
    const long long ip = I[static_cast<std::size_t>(p - 1)];
    if (ip >= 2) head_short[p] = apply_aut(g_sum(0, ip - 2, n), suffix[p]);
    head_full[p] = apply_aut(g_elem(ip, n), suffix[p]);
  }

  std::map<std::array<int, 3>, RingElem> tails;
  auto tail_elem = [&](int m, int q, bool wrap) -> const RingElem& {
    const std::array<int, 3> key{m, q, wrap ? 1 : 0};
    auto it = tails.find(key);
    if (it == tails.end()) {
      const BraidWord omega = wrap ? compose(suffix[q], whole_inv) : suffix[q];
      it = tails
               .emplace(key, RingElem::from_word(
                                 act(omega, FreeWord::generator(n, Basis::a, m))))
               .first;
    }
    return it->second;
  };

  RingElem total = RingElem::zero(n);
  for (const Partition& part : enumerate_partitions(d, n)) {
    RingElem prod = RingElem::one(n);
    bool vanishes = false;
    for (const Block& blk : part.blocks) {
      const int len = blk.length();
      if (len < n - 1) {
        if (I[static_cast<std::size_t>(blk.p - 1)] == 1) {
          vanishes = true;
          break;
        }
        prod *= head_short[blk.p] * tail_elem(len + 1, blk.q, blk.wraps());
      } else {
        prod *= head_full[blk.p] * tail_elem(n - 1, blk.q, blk.wraps());
      }
    }
    if (!vanishes) total += prod;
  }

  LefschetzResult res;
  res.representative =
      -(RingElem::from_word(FreeWord::generator(n, Basis::a, n, nf.mu)) *
        apply_aut(total, nf.gamma));
  res.route = Route::theorem1;
  res.normal_form = nf;
  return res;
}

LefschetzResult foxtrace(const BraidWord& b) {
  if (b.n < 3) throw UsageError("foxtrace: n must be at least 3");
  LefschetzResult res;
  res.representative = -reduced_jacobian(b).trace();
  res.route = Route::foxtrace;
  return res;
}

Int nielsen_upper(const std::vector<long long>& I, int n) {
  check_sequence(I, "nielsen_upper");
  if (n < 3) throw UsageError("nielsen_upper: n must be at least 3");
  const int d = static_cast<int>(I.size());
  Int total = 0;
  for (const Partition& part : enumerate_partitions(d, n)) {
    Int prod = 1;
    for (const Block& blk : part.blocks) {
      if (blk.length() < n - 1)
        prod *= I[static_cast<std::size_t>(blk.p - 1)] - 1;
    }
    total += prod;
  }
  return total;
}

Int s_block_count(const std::vector<long long>& I, const Block& b, int n) {
  check_sequence(I, "s_block_count");
  const int d = static_cast<int>(I.size());
  const Int ip = I[static_cast<std::size_t>(b.p - 1)];
  if (b.length() < n - 1) return ip - 1;
  const int succ = b.p % d + 1;
  const Int ipp = I[static_cast<std::size_t>(succ - 1)];
  return (ip - 1) * (ipp - 1) - 1;
}

Int s_count_n3(const std::vector<long long>& I) {
  check_sequence(I, "s_count_n3");
  const int d = static_cast<int>(I.size());
  for (long long i : I)
    if (i < 2) return 0;  // the range [2, i_l] is empty
  Int space = 1;
  bool small = true;
  for (long long i : I) {
    space *= i - 1;
    if (space > 1000000) {
      small = false;
      break;
    }
  }
  if (small) {
    // Odometer over j_l in [2, i_l], rejecting any cyclic pair (i_l, 2).
    std::vector<long long> j(static_cast<std::size_t>(d), 2);
    Int count = 0;
    while (true) {
      bool ok = true;
      for (int l = 0; l < d; ++l) {
        if (j[static_cast<std::size_t>(l)] == I[static_cast<std::size_t>(l)] &&
            j[static_cast<std::size_t>((l + 1) % d)] == 2) {
          ok = false;
          break;
        }
      }
      if (ok) ++count;
      int pos = 0;
      while (pos < d) {
        if (++j[static_cast<std::size_t>(pos)] <= I[static_cast<std::size_t>(pos)]) break;
        j[static_cast<std::size_t>(pos)] = 2;
        ++pos;
      }
      if (pos == d) break;
    }
    return count;
  }
  // Two-state transfer matrix: a position only matters to its successor
  // through whether it sits at its top value i_l. State 0 carries j_l = i_l,
  // state 1 carries j_l in [2, i_l - 1].
  std::array<Int, 4> M{1, 0, 0, 1};
  auto mul = [](const std::array<Int, 4>& A, const std::array<Int, 4>& B) {
    return std::array<Int, 4>{A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3],
                              A[2] * B[0] + A[3] * B[2], A[2] * B[1] + A[3] * B[3]};
  };
  for (int l = 0; l < d; ++l) {
    const long long inext = I[static_cast<std::size_t>((l + 1) % d)];
    // From the top the successor may not take the value 2; when the next
    // range is just {2} that value is itself the top.
    std::array<Int, 4> step{inext == 2 ? 0 : 1, inext >= 3 ? inext - 3 : 0, 1,
                            inext - 2};
    M = mul(M, step);
  }
  return M[0] + M[3];
}

Theorem2Bounds theorem2_bounds(const std::vector<long long>& I, int n) {
  check_sequence(I, "theorem2_bounds");
  if (n < 3) throw UsageError("theorem2_bounds: n must be at least 3");
  if (n >= 4) {
    for (long long i : I)
      if (i < 2)
        throw UsageError(
            "theorem2_bounds: for n >= 4 every exponent must be at least 2");
  } else {
    for (long long i : I)
      if (i < 3)
        throw UsageError(
            "theorem2_bounds: for n = 3 every exponent must be at least 3");
  }
  const int d = static_cast<int>(I.size());

  Theorem2Bounds out;
  if (n >= 4) {
    for (const Partition& part : enumerate_partitions_prime(d, n)) {
      Int prod = 1;
      for (const Block& blk : part.blocks) prod *= s_block_count(I, blk, n);
      out.refined_sum += prod;
    }
  } else {
    out.refined_sum = s_count_n3(I);
  }

  // Terms with distinct exponent sums live in distinct fixed point classes,
  // and a degree with nonzero net coefficient contains an essential class.
  // mu and gamma shift or preserve all degrees uniformly, so they are fixed
  // to 0 and e here.
  NormalForm plain{0, I, BraidWord{n, {}}, n, false};
  std::map<long long, Int> per_degree;
  const RingElem rep = theorem1(plain).representative;
  for (const auto& [w, c] : rep.terms()) per_degree[w.exponent_sum()] += c;
  for (const auto& [deg, c] : per_degree)
    if (c != 0) ++out.t_distinct;

  const Int defect = n == 3 ? Int(4) : Int(2 * n - 2);
  out.upper = out.refined_sum;
  out.lower = out.refined_sum - defect;
  if (out.t_distinct > out.lower) out.lower = out.t_distinct;
  return out;
}

namespace {

struct Lemma5Ctx {
  const std::vector<long long>& I;
  int n;
  int d;
  std::vector<BraidWord> suffix;  // suffix[l] = beta_l, beta_{d+1} = e
  std::map<std::pair<int, int>, RingElem> w_memo;

  Lemma5Ctx(const std::vector<long long>& I_, int n_)
      : I(I_), n(n_), d(static_cast<int>(I_.size())),
        suffix(static_cast<std::size_t>(d) + 2) {
    for (int l = 1; l <= d + 1; ++l) suffix[l] = beta_seq(suffix_of(I, l), n);
  }

  // Sum of W_I over partitions of the linear segment {k, ..., l} into
  // consecutive blocks of length at most n-1; the empty segment k = l+1
  // contributes the unit.
  RingElem W(int k, int l) {
    if (k >= 1 && k <= l && l <= d) {
      const auto key = std::make_pair(k, l);
      auto it = w_memo.find(key);
      if (it != w_memo.end()) return it->second;
      RingElem sum = RingElem::zero(n);
      const int max_len = std::min(n - 1, l - k + 1);
      for (int len = 1; len <= max_len; ++len) {
        Block blk{k, k + len - 1, d};
        sum += w_block(I, blk, n) * W(k + len, l);
      }
      w_memo.emplace(key, sum);
      return sum;
    }
    if (k == l + 1 && l >= 0 && l <= d) return RingElem::one(n);
    return RingElem::zero(n);
  }

  RingElem S(int l) const {
    if (l < 1 || l > d) return RingElem::zero(n);
    const long long il = I[static_cast<std::size_t>(l - 1)];
    const RingElem base =
        g_sum(2, il, n) * RingElem::from_word(FreeWord::generator(n, Basis::a, 2, -1)) +
        g_elem(il - 1, n);
    return apply_aut(base, suffix[static_cast<std::size_t>(l)]);
  }

  RingElem G(int l) const {
    if (l >= 1 && l <= d)
      return apply_aut(g_elem(I[static_cast<std::size_t>(l - 1)], n),
                       suffix[static_cast<std::size_t>(l)]);
    if (l == d + 1) return -RingElem::one(n);
    return RingElem::zero(n);
  }

  RingElem alpha(int q, int l) const {
    if (q < 1 || q > n - 1 || l < 1 || l > d) return RingElem::zero(n);
    return RingElem::from_word(act(suffix[static_cast<std::size_t>(l)],
                                   FreeWord::generator(n, Basis::a, q)));
  }
};

}  // namespace

RingElem lemma5_entry(const std::vector<long long>& I, int i, int j, int n) {
  check_sequence(I, "lemma5_entry");
  if (i < 1 || i > n - 1 || j < 1 || j > n - 1)
    throw UsageError("lemma5_entry: index out of range");
  Lemma5Ctx ctx(I, n);
  const int d = ctx.d;
  if (i == 1)
    return -(ctx.W(1, d + 2 - j) * ctx.S(d + 3 - j)) -
           ctx.W(1, d + 1 - j) * ctx.G(d + 2 - j);
  RingElem sum = RingElem::zero(n);
  for (int u = 0; i + u <= n - 1 && 1 + u <= d; ++u) {
    sum += ctx.alpha(i + u, 1 + u) *
           (ctx.W(2 + u, d + 2 - j) * ctx.S(d + 3 - j) +
            ctx.W(2 + u, d + 1 - j) * ctx.G(d + 2 - j));
  }
  if (i == j - d) sum += RingElem::one(n);
  return sum;
}

namespace {

// All reduced words with at most `bound` syllables, exponents in
// [-bound, bound] minus zero; the identity comes first.
std::vector<FreeWord> conjugator_words(int n, int bound) {
  std::vector<FreeWord> all;
  all.push_back(FreeWord::identity(n, Basis::a));
  std::vector<FreeWord> level = {all.front()};
  for (int s = 0; s < bound; ++s) {
    std::vector<FreeWord> next;
    for (const FreeWord& w : level) {
      const int last = w.syllables().empty() ? 0 : w.syllables().back().gen;
      for (int g = 1; g <= n; ++g) {
        if (g == last) continue;
        for (long long e = -bound; e <= bound; ++e) {
          if (e == 0) continue;
          FreeWord u = w;
          u.append(g, e);
          next.push_back(std::move(u));
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

}  // namespace

RingElem merge_classes(const RingElem& x, const BraidWord& b, int bound) {
  if (bound <= 0 || x.term_count() < 2) return x;
  const int n = x.rank();

  std::vector<FreeWord> words;
  std::vector<Int> coeffs;
  std::map<FreeWord, std::size_t> index;
  for (const auto& [w, c] : x.terms()) {
    index.emplace(w, words.size());
    words.push_back(w);
    coeffs.push_back(c);
  }

  std::vector<std::size_t> parent(words.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };

  for (const FreeWord& u : conjugator_words(n, bound)) {
    if (u.is_identity()) continue;
    const FreeWord twisted = act(b, u);
    const FreeWord uinv = u.inverse();
    for (std::size_t i = 0; i < words.size(); ++i) {
      const FreeWord moved = twisted * words[i] * uinv;
      const auto it = index.find(moved);
      if (it != index.end()) {
        const std::size_t a = find(i);
        const std::size_t c = find(it->second);
        if (a != c) parent[a] = c;
      }
    }
  }

  // Collapse each class onto its canonically smallest word.
  std::map<std::size_t, FreeWord> repr;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::size_t root = find(i);
    auto it = repr.find(root);
    if (it == repr.end()) {
      repr.emplace(root, words[i]);
    } else if (words[i] < it->second) {
      it->second = words[i];
    }
  }
  RingElem out(n);
  for (std::size_t i = 0; i < words.size(); ++i)
    out.add_term(repr.at(find(i)), coeffs[i]);
  return out;
}

}  // namespace braidlef
