#include "braidlef/fox.hpp"

#include <cstddef>

#include "braidlef/errors.hpp"
#include "braidlef/lefschetz.hpp"

namespace braidlef {

std::vector<RingElem> fox_row(const FreeWord& w, int n) {
  std::vector<RingElem> row(static_cast<std::size_t>(n), RingElem::zero(n));
  const FreeWord wa = w.basis() == Basis::a ? w : w.to_basis(Basis::a);
  FreeWord prefix(n, Basis::a);
  for (const auto& s : wa.syllables()) {
    RingElem& cell = row[static_cast<std::size_t>(s.gen - 1)];
    if (s.exp > 0) {
      // d(u a^k) = du + u (e + a + ... + a^{k-1})
      for (long long t = 0; t < s.exp; ++t) {
        FreeWord term = prefix;
        term.append(s.gen, t);
        cell.add_term(term, 1);
      }
    } else {
      // d(u a^-k) = du - u (a^-1 + ... + a^-k)
      for (long long t = -1; t >= s.exp; --t) {
        FreeWord term = prefix;
        term.append(s.gen, t);
        cell.add_term(term, -1);
      }
    }
    prefix.append(s.gen, s.exp);
  }
  return row;
}

RingElem fox_derivative(const FreeWord& w, int j) {
  const int n = w.rank();
  if (n == 0) return RingElem();
  if (j < 1 || j > n) throw UsageError("fox_derivative: generator index out of range");
  return fox_row(w, n)[static_cast<std::size_t>(j - 1)];
}

RingElem fox_derivative(const RingElem& x, int j) {
  const int n = x.rank();
  if (n == 0) return RingElem();
  if (j < 1 || j > n) throw UsageError("fox_derivative: generator index out of range");
  RingElem out = RingElem::zero(n);
  for (const auto& [w, c] : x.terms()) {
    const RingElem dw = fox_derivative(w, j);
    for (const auto& [word, coeff] : dw.terms()) out.add_term(word, c * coeff);
  }
  return out;
}

RingMatrix jacobian(const BraidWord& b) {
  const std::size_t dim = static_cast<std::size_t>(b.n);
  RingMatrix J = RingMatrix::zero(b.n, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const FreeWord image =
        act(b, FreeWord::generator(b.n, Basis::a, static_cast<int>(i) + 1));
    std::vector<RingElem> row = fox_row(image, b.n);
    for (std::size_t j = 0; j < dim; ++j) J.at(i, j) = row[j];
  }
  return J;
}

RingMatrix reduced_jacobian(const BraidWord& b) {
  const std::size_t dim = static_cast<std::size_t>(b.n - 1);
  RingMatrix J = RingMatrix::zero(b.n, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const FreeWord image =
        act(b, FreeWord::generator(b.n, Basis::a, static_cast<int>(i) + 1));
    std::vector<RingElem> row = fox_row(image, b.n);
    for (std::size_t j = 0; j < dim; ++j) J.at(i, j) = row[j];
  }
  return J;
}

RingMatrix lemma3_matrix(long long m, int n) {
  if (m < 1) throw UsageError("lemma3_matrix: m must be positive");
  if (n < 3) throw UsageError("lemma3_matrix: n must be at least 3");
  const std::size_t dim = static_cast<std::size_t>(n - 1);
  RingMatrix A = RingMatrix::zero(n, dim);
  const RingElem Gm = g_sum(2, m, n);
  A.at(0, 0) = Gm;
  A.at(0, 1) = -g_elem(m, n);
  if (dim >= 3) {
    RingElem third = Gm * RingElem::from_word(FreeWord::generator(n, Basis::a, 2, -1));
    third += g_elem(m - 1, n);
    A.at(0, 2) = -third;
  }
  for (std::size_t i = 1; i < dim; ++i) {
    A.at(i, 0) = RingElem::from_word(
        FreeWord::generator(n, Basis::a, static_cast<int>(i) + 1), -1);
    if (i + 1 < dim) A.at(i, i + 1) = RingElem::one(n);
  }
  return A;
}

}  // namespace braidlef
