#include "braidlef/normalize.hpp"

#include <cstdlib>
#include <stdexcept>

namespace braidlef {

namespace {

// Intermediate words live over the two-letter alphabet {sigma_1, rho}.
// A token is a merged run: sigma tokens always have exp >= 1, rho tokens any
// nonzero exp.
struct Tok {
  bool sigma = false;
  long long exp = 0;
};

void push_tok(std::vector<Tok>& w, bool sigma, long long exp) {
  if (exp == 0) return;
  if (!w.empty() && w.back().sigma == sigma) {
    w.back().exp += exp;
    if (w.back().exp == 0) w.pop_back();
    return;
  }
  w.push_back({sigma, exp});
}

long long ceil_div(long long j, long long n) {
  return j / n + (j % n > 0 ? 1 : 0);
}

// Appends ((sigma_1 rho)^{n-2} sigma_1)^l, the expansion of theta^l rho^{-l}.
void push_block_power(std::vector<Tok>& w, int n, long long l) {
  for (long long r = 0; r < l; ++r) {
    for (int s = 0; s < n - 2; ++s) {
      push_tok(w, true, 1);
      push_tok(w, false, 1);
    }
    push_tok(w, true, 1);
  }
}

// Prepends the inverse of one token to gamma (tokens move front to back by
// conjugation, so gamma picks up x^{-1} on the left each time).
void prepend_inverse(BraidWord& gamma, int n, const Tok& t) {
  std::vector<int> inv;
  if (t.sigma) {
    inv.assign(static_cast<std::size_t>(t.exp), -1);
  } else {
    // Only unit rho tokens are ever rotated.
    for (int i = 1; i <= n - 1; ++i) inv.push_back(-i);
  }
  gamma.letters.insert(gamma.letters.begin(), inv.begin(), inv.end());
}

}  // namespace

NormalForm normalize(const BraidWord& b) {
  const int n = b.n;
  if (n < 3) throw UsageError("normal form needs n >= 3");

  long long mu = 0;
  std::vector<Tok> w;

  // Rewrite each Artin letter over {sigma_1, rho}, pulling the central full
  // twists out front:
  //   sigma_i      = rho^{1-i} sigma_1 rho^{i-1}
  //   sigma_i^{-1} = theta^{-1} rho^{2-i} (sigma_1 rho)^{n-2} rho^{i-1}
  for (int letter : b.letters) {
    const int i = std::abs(letter);
    if (i < 1 || i > n - 1) throw UsageError("braid letter out of range");
    if (letter > 0) {
      push_tok(w, false, 1 - i);
      push_tok(w, true, 1);
      push_tok(w, false, i - 1);
    } else {
      mu -= 1;
      push_tok(w, false, 2 - i);
      for (int s = 0; s < n - 2; ++s) {
        push_tok(w, true, 1);
        push_tok(w, false, 1);
      }
      push_tok(w, false, i - 1);
    }
  }

  BraidWord gamma{n, {}};

  for (long long guard = 0;; ++guard) {
    if (guard > 1000000)
      throw std::logic_error("normalize did not reach the normal form");

    if (w.empty())
      return NormalForm{mu, {}, gamma, n, true};

    // Eliminate the leftmost rho power other than rho itself via
    // rho^j = theta^{k-l} ((sigma_1 rho)^{n-2} sigma_1)^l, j = kn - l,
    // 0 <= l < n.
    std::size_t bad = w.size();
    for (std::size_t t = 0; t < w.size(); ++t)
      if (!w[t].sigma && w[t].exp != 1) {
        bad = t;
        break;
      }
    if (bad < w.size()) {
      const long long j = w[bad].exp;
      const long long k = ceil_div(j, n);
      const long long l = k * n - j;
      mu += k - l;
      std::vector<Tok> out;
      out.reserve(w.size() + static_cast<std::size_t>(2 * (n - 1) * l));
      for (std::size_t t = 0; t < bad; ++t) push_tok(out, w[t].sigma, w[t].exp);
      push_block_power(out, n, l);
      for (std::size_t t = bad + 1; t < w.size(); ++t)
        push_tok(out, w[t].sigma, w[t].exp);
      w = std::move(out);
      continue;
    }

    bool has_sigma = false, has_rho = false;
    for (const auto& t : w) (t.sigma ? has_sigma : has_rho) = true;

    if (!has_sigma) {
      // A single leftover rho: rho = theta^{2-n} ((sigma_1 rho)^{n-2} sigma_1)^{n-1}.
      mu += 2 - n;
      std::vector<Tok> out;
      push_block_power(out, n, n - 1);
      w = std::move(out);
      continue;
    }
    if (!has_rho) {
      // Pure sigma_1 power: append theta^{-1} rho^n with the last n-1 rho
      // factors already expanded, so only unit rho tokens enter the word.
      mu -= 1;
      push_tok(w, false, 1);
      push_block_power(w, n, 1);
      continue;
    }

    // Rotate to the leftmost cyclic sigma-run start so the word reads
    // sigma_1^{i_1} rho ... sigma_1^{i_d} rho. Each moved front token x
    // conjugates the word (w -> x^{-1} w x), so gamma gains x^{-1} on the
    // left. A seam rho rho pair created by the rotation merges to rho^2 and
    // is eliminated on the next pass.
    std::size_t start = w.size();
    for (std::size_t t = 0; t < w.size(); ++t) {
      const Tok& prev = w[(t + w.size() - 1) % w.size()];
      if (w[t].sigma && !prev.sigma) {
        start = t;
        break;
      }
    }
    if (start == w.size())
      throw std::logic_error("normalize lost the sigma-run structure");
    if (start > 0) {
      std::vector<Tok> out;
      out.reserve(w.size());
      for (std::size_t t = start; t < w.size(); ++t)
        push_tok(out, w[t].sigma, w[t].exp);
      for (std::size_t t = 0; t < start; ++t) {
        prepend_inverse(gamma, n, w[t]);
        push_tok(out, w[t].sigma, w[t].exp);
      }
      w = std::move(out);
      continue;
    }

    // Starts with a sigma run and ends with rho; alternation is guaranteed
    // by token merging, so the exponent list of the sigma tokens is I.
    std::vector<long long> I;
    for (const auto& t : w)
      if (t.sigma) I.push_back(t.exp);

    // beta(I) can itself be a full-twist power (beta(1,...,1) with n-1 ones
    // is theta); the empty-I sentinel is reserved for exactly that case, so
    // fold central words into mu. The letter-count grading prefilters: a
    // central power must have exponent sum c * n(n-1).
    long long s = static_cast<long long>(I.size()) * (n - 1);
    for (long long i : I) s += i;
    const long long twist = static_cast<long long>(n) * (n - 1);
    if (s % twist == 0 &&
        equal_via_action(beta_seq(I, n), power(theta(n), s / twist)))
      return NormalForm{mu + s / twist, {}, gamma, n, true};
    return NormalForm{mu, I, gamma, n, false};
  }
}

BraidWord normal_form_braid(const NormalForm& nf) {
  BraidWord core = power(theta(nf.n), nf.mu);
  core = compose(core, beta_seq(nf.I, nf.n));
  return compose(compose(inverse(nf.gamma), core), nf.gamma);
}

bool verify(const NormalForm& nf, const BraidWord& b) {
  if (nf.n != b.n) return false;
  for (long long i : nf.I)
    if (i < 1) return false;
  if (nf.central_only != nf.I.empty()) return false;
  return equal_via_action(normal_form_braid(nf), b);
}

}  // namespace braidlef
