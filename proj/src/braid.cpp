#include "braidlef/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace braidlef {

namespace {

void check_letter(int n, int letter) {
  const int i = letter < 0 ? -letter : letter;
  if (letter == 0 || i < 1 || i > n - 1)
    throw UsageError("braid letter " + std::to_string(letter) +
                     " out of range for " + std::to_string(n) + " strands");
}

// Image of one word under one Artin generator. Substitution touches only the
// affected generators, so the cost is linear in the output length.
FreeWord act_letter(const BraidWord& b, int letter, const FreeWord& w) {
  check_letter(b.n, letter);
  const int i = letter < 0 ? -letter : letter;
  const bool pos = letter > 0;
  FreeWord out(w.rank(), w.basis());
  auto append_image = [&](const std::vector<Syllable>& image, long long exp) {
    const long long reps = exp < 0 ? -exp : exp;
    for (long long r = 0; r < reps; ++r) {
      if (exp > 0)
        for (const auto& s : image) out.append(s.gen, s.exp);
      else
        for (auto it = image.rbegin(); it != image.rend(); ++it)
          out.append(it->gen, -it->exp);
    }
  };
  if (w.basis() == Basis::a) {
    // sigma_i:   a_i -> a_{i+1} a_i^{-1} a_{i-1}
    // sigma_i^{-1}: a_i -> a_{i-1} a_i^{-1} a_{i+1}   (a_0 factors dropped)
    std::vector<Syllable> image;
    if (pos) {
      image.push_back({i + 1, 1});
      image.push_back({i, -1});
      if (i > 1) image.push_back({i - 1, 1});
    } else {
      if (i > 1) image.push_back({i - 1, 1});
      image.push_back({i, -1});
      image.push_back({i + 1, 1});
    }
    for (const auto& s : w.syllables()) {
      if (s.gen == i)
        append_image(image, s.exp);
      else
        out.append(s.gen, s.exp);
    }
  } else {
    // sigma_i:   xi_i -> xi_i xi_{i+1} xi_i^{-1},  xi_{i+1} -> xi_i
    // sigma_i^{-1}: xi_i -> xi_{i+1},  xi_{i+1} -> xi_{i+1}^{-1} xi_i xi_{i+1}
    std::vector<Syllable> image_i, image_ip1;
    if (pos) {
      image_i = {{i, 1}, {i + 1, 1}, {i, -1}};
      image_ip1 = {{i, 1}};
    } else {
      image_i = {{i + 1, 1}};
      image_ip1 = {{i + 1, -1}, {i, 1}, {i + 1, 1}};
    }
    for (const auto& s : w.syllables()) {
      if (s.gen == i)
        append_image(image_i, s.exp);
      else if (s.gen == i + 1)
        append_image(image_ip1, s.exp);
      else
        out.append(s.gen, s.exp);
    }
  }
  return out;
}

}  // namespace

BraidWord parse_braid(const std::string& text, int n) {
  if (n < 2) throw UsageError("braid group needs at least 2 strands");
  BraidWord b{n, {}};
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    char* end = nullptr;
    const long long v = std::strtoll(tok.c_str(), &end, 10);
    if (end == nullptr || *end != '\0')
      throw ParseError("braid token '" + tok + "' is not an integer");
    if (v == 0) throw ParseError("braid letters are nonzero integers");
    const long long a = v < 0 ? -v : v;
    if (a > n - 1)
      throw ParseError("braid letter " + tok + " out of range for n = " +
                       std::to_string(n));
    b.letters.push_back(static_cast<int>(v));
  }
  return b;
}

std::string braid_str(const BraidWord& b) {
  if (b.letters.empty()) return "e";
  std::ostringstream out;
  for (std::size_t k = 0; k < b.letters.size(); ++k) {
    if (k > 0) out << ' ';
    out << b.letters[k];
  }
  return out.str();
}

BraidWord compose(const BraidWord& b1, const BraidWord& b2) {
  if (b1.n != b2.n) throw UsageError("cannot compose braids on different strand counts");
  BraidWord b = b1;
  b.letters.insert(b.letters.end(), b2.letters.begin(), b2.letters.end());
  return b;
}

BraidWord inverse(const BraidWord& b) {
  BraidWord r{b.n, {}};
  r.letters.reserve(b.letters.size());
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
    r.letters.push_back(-*it);
  return r;
}

BraidWord power(const BraidWord& b, long long k) {
  const BraidWord base = k >= 0 ? b : inverse(b);
  const long long reps = k >= 0 ? k : -k;
  BraidWord r{b.n, {}};
  r.letters.reserve(base.letters.size() * static_cast<std::size_t>(reps));
  for (long long i = 0; i < reps; ++i)
    r.letters.insert(r.letters.end(), base.letters.begin(), base.letters.end());
  return r;
}

BraidWord rho(int n) {
  if (n < 2) throw UsageError("rho needs at least 2 strands");
  BraidWord b{n, {}};
  for (int i = n - 1; i >= 1; --i) b.letters.push_back(i);
  return b;
}

BraidWord theta(int n) {
  if (n < 2) throw UsageError("theta needs at least 2 strands");
  BraidWord b{n, {}};
  for (int r = 0; r < n; ++r)
    for (int i = 1; i <= n - 1; ++i) b.letters.push_back(i);
  return b;
}

BraidWord beta_atom(long long i, int n) {
  if (i < 1) throw UsageError("beta(i) needs i >= 1");
  BraidWord b{n, {}};
  b.letters.assign(static_cast<std::size_t>(i), 1);
  return compose(b, rho(n));
}

BraidWord beta_seq(const std::vector<long long>& I, int n) {
  BraidWord b{n, {}};
  for (long long i : I) b = compose(b, beta_atom(i, n));
  return b;
}

FreeWord act(const BraidWord& b, const FreeWord& w) {
  if (w.rank() != b.n)
    throw UsageError("word rank does not match braid strand count");
  FreeWord out = w;
  for (int letter : b.letters) out = act_letter(b, letter, out);
  return out;
}

std::vector<int> induced_permutation(const BraidWord& b) {
  // occupant[q] = strand currently at position q+1.
  std::vector<int> occupant(static_cast<std::size_t>(b.n));
  std::iota(occupant.begin(), occupant.end(), 1);
  for (int letter : b.letters) {
    check_letter(b.n, letter);
    const int i = letter < 0 ? -letter : letter;
    std::swap(occupant[i - 1], occupant[i]);
  }
  std::vector<int> perm(static_cast<std::size_t>(b.n));
  for (int q = 0; q < b.n; ++q) perm[occupant[q] - 1] = q + 1;
  return perm;
}

bool equal_via_action(const BraidWord& b1, const BraidWord& b2) {
  if (b1.n != b2.n) return false;
  for (int i = 1; i <= b1.n; ++i) {
    const FreeWord a_i = FreeWord::generator(b1.n, Basis::a, i);
    if (!(act(b1, a_i) == act(b2, a_i))) return false;
  }
  return true;
}

}  // namespace braidlef
