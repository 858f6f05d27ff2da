#include "braidlef/groupring.hpp"

#include <sstream>

namespace braidlef {

RingElem RingElem::one(int n) {
  RingElem x(n);
  x.add_term(FreeWord::identity(n, Basis::a), 1);
  return x;
}

RingElem RingElem::from_word(const FreeWord& w, Int coeff) {
  RingElem x(w.rank());
  x.add_term(w.basis() == Basis::a ? w : w.to_basis(Basis::a), coeff);
  return x;
}

Int RingElem::coeff(const FreeWord& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Int(0) : it->second;
}

void RingElem::add_term(const FreeWord& w, const Int& c) {
  if (c == 0) return;
  if (w.rank() != n_)
    throw UsageError("term rank does not match ring element rank");
  const auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void RingElem::adopt_rank(const RingElem& other) {
  if (n_ == other.n_) return;
  if (is_zero() && n_ == 0) {
    n_ = other.n_;
    return;
  }
  if (other.is_zero() && other.n_ == 0) return;
  throw UsageError("group-ring ranks differ");
}

RingElem& RingElem::operator+=(const RingElem& rhs) {
  adopt_rank(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& rhs) {
  adopt_rank(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& rhs) {
  adopt_rank(rhs);
  if (is_zero()) return *this;
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  RingElem out(n_);
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : rhs.terms_) out.add_term(w1 * w2, c1 * c2);
  *this = std::move(out);
  return *this;
}

RingElem RingElem::operator-() const {
  RingElem out(n_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

RingElem operator*(const Int& c, const RingElem& x) {
  RingElem out(x.n_);
  if (c == 0) return out;
  for (const auto& [w, k] : x.terms_) out.terms_.emplace(w, c * k);
  return out;
}

std::string RingElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (w.is_identity()) {
      out << a;
    } else {
      if (a != 1) out << a << ' ';
      out << w.str();
    }
  }
  return out.str();
}

RingElem apply_aut(const RingElem& x, const BraidWord& b) {
  RingElem out(x.rank());
  for (const auto& [w, c] : x.terms()) out.add_term(act(b, w), c);
  return out;
}

RingMatrix RingMatrix::zero(int n, std::size_t dim) {
  RingMatrix m{n, dim, {}};
  m.entry.assign(dim * dim, RingElem(n));
  return m;
}

RingMatrix RingMatrix::identity(int n, std::size_t dim) {
  RingMatrix m = zero(n, dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = RingElem::one(n);
  return m;
}

RingElem RingMatrix::trace() const {
  RingElem t(n);
  for (std::size_t i = 0; i < dim; ++i) t += at(i, i);
  return t;
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
  if (a.dim != b.dim || a.n != b.n)
    throw UsageError("matrix shapes or ranks differ");
  RingMatrix out = RingMatrix::zero(a.n, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.dim; ++j) {
        if (b.at(k, j).is_zero()) continue;
        out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return out;
}

RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) {
  if (a.dim != b.dim || a.n != b.n)
    throw UsageError("matrix shapes or ranks differ");
  RingMatrix out = a;
  for (std::size_t i = 0; i < a.dim * a.dim; ++i) out.entry[i] += b.entry[i];
  return out;
}

RingMatrix mat_apply_aut(const RingMatrix& m, const BraidWord& b) {
  RingMatrix out = m;
  for (auto& x : out.entry) x = apply_aut(x, b);
  return out;
}

}  // namespace braidlef
