#include "braidlef/burau.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>

#include "braidlef/errors.hpp"
#include "braidlef/fox.hpp"
#include "braidlef/lefschetz.hpp"

namespace braidlef {

LaurentPoly LaurentPoly::constant(const Int& c) {
  LaurentPoly p;
  p.add_term(0, c);
  return p;
}

LaurentPoly LaurentPoly::t_power(long long e, const Int& coeff) {
  LaurentPoly p;
  p.add_term(e, coeff);
  return p;
}

Int LaurentPoly::coeff(long long e) const {
  const auto it = c_.find(e);
  return it == c_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(long long e, const Int& c) {
  if (c == 0) return;
  const auto [it, inserted] = c_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.c_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.c_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : rhs.c_) out.add_term(e1 + e2, c1 * c2);
  *this = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : c_) out.c_.emplace(e, -c);
  return out;
}

namespace {

void term_body(std::ostringstream& out, long long e, const Int& a) {
  if (e == 0) {
    out << a;
    return;
  }
  if (a != 1) out << a;
  out << "t";
  if (e != 1) out << "^" << e;
}

std::string render(const std::map<long long, Int>& c, bool spaced) {
  if (c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, coeff] : c) {
    const bool neg = coeff < 0;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (spaced ? (neg ? " - " : " + ") : (neg ? "-" : "+"));
    }
    term_body(out, e, neg ? Int(-coeff) : coeff);
    first = false;
  }
  return out.str();
}

}  // namespace

std::string LaurentPoly::str() const { return render(c_, true); }
std::string LaurentPoly::str_compact() const { return render(c_, false); }

LaurentPoly abelianize(const RingElem& x) {
  LaurentPoly p;
  for (const auto& [w, c] : x.terms()) p.add_term(w.exponent_sum(), c);
  return p;
}

LaurentMatrix LaurentMatrix::zero(std::size_t dim) {
  LaurentMatrix m;
  m.dim = dim;
  m.entry.assign(dim * dim, LaurentPoly{});
  return m;
}

LaurentMatrix LaurentMatrix::identity(std::size_t dim) {
  LaurentMatrix m = zero(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = LaurentPoly::constant(1);
  return m;
}

LaurentPoly LaurentMatrix::trace() const {
  LaurentPoly t;
  for (std::size_t i = 0; i < dim; ++i) t += at(i, i);
  return t;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.dim != b.dim) throw UsageError("laurent matrix product: dim mismatch");
  LaurentMatrix out = LaurentMatrix::zero(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.dim; ++j)
        out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.dim != b.dim) throw UsageError("laurent matrix sum: dim mismatch");
  LaurentMatrix out = a;
  for (std::size_t k = 0; k < out.entry.size(); ++k) out.entry[k] += b.entry[k];
  return out;
}

LaurentMatrix mat_pow(const LaurentMatrix& a, long long k) {
  if (k < 0) throw UsageError("mat_pow: negative exponent");
  LaurentMatrix out = LaurentMatrix::identity(a.dim);
  LaurentMatrix base = a;
  while (k > 0) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

LaurentMatrix reduced_burau(const BraidWord& b) {
  const RingMatrix j = reduced_jacobian(b);
  LaurentMatrix out = LaurentMatrix::zero(j.dim);
  for (std::size_t r = 0; r < j.dim; ++r)
    for (std::size_t c = 0; c < j.dim; ++c)
      out.at(r, c) = abelianize(j.at(r, c));
  return out;
}

LaurentMatrix burau_letter(int letter, int n) {
  if (n < 3) throw UsageError("burau_letter: n must be at least 3");
  const int i = std::abs(letter);
  if (letter == 0 || i > n - 1)
    throw UsageError("burau_letter: generator index out of range");
  LaurentMatrix m = LaurentMatrix::identity(static_cast<std::size_t>(n - 1));
  const std::size_t row = static_cast<std::size_t>(i - 1);
  m.at(row, row) = LaurentPoly{};
  if (letter > 0) {
    if (i - 2 >= 0) m.at(row, row - 1) = LaurentPoly::t_power(1);
    m.at(row, row) = LaurentPoly::t_power(1, -1);
    if (i + 1 <= n - 1) m.at(row, row + 1) = LaurentPoly::constant(1);
  } else {
    if (i - 2 >= 0) m.at(row, row - 1) = LaurentPoly::constant(1);
    m.at(row, row) = LaurentPoly::t_power(-1, -1);
    if (i + 1 <= n - 1) m.at(row, row + 1) = LaurentPoly::t_power(-1);
  }
  return m;
}

LaurentMatrix burau_direct(const BraidWord& b) {
  if (b.n < 3) throw UsageError("burau_direct: n must be at least 3");
  LaurentMatrix out = LaurentMatrix::identity(static_cast<std::size_t>(b.n - 1));
  for (int letter : b.letters) out = out * burau_letter(letter, b.n);
  return out;
}

namespace {

// Determinant of the principal submatrix on `idx`, by cofactor expansion
// along the first remaining row. Exact; intended for order <= 6.
LaurentPoly subdet(const LaurentMatrix& a, std::vector<std::size_t> idx) {
  if (idx.empty()) return LaurentPoly::constant(1);
  if (idx.size() == 1) return a.at(idx[0], idx[0]);
  LaurentPoly det;
  const std::size_t row = idx[0];
  for (std::size_t c = 0; c < idx.size(); ++c) {
    const LaurentPoly& pivot = a.at(row, idx[c]);
    if (pivot.is_zero()) continue;
    // Minor: drop the first row index and column idx[c]; the sub-submatrix
    // is indexed by the remaining rows against the remaining columns, so
    // recurse on a rectangular selection via explicit row/col lists.
    std::vector<std::size_t> rows(idx.begin() + 1, idx.end());
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (k != c) cols.push_back(idx[k]);
    // Expand recursively over the rectangular minor.
    // Build it as a dense matrix once; orders here are tiny.
    LaurentMatrix minor = LaurentMatrix::zero(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t k = 0; k < cols.size(); ++k)
        minor.at(r, k) = a.at(rows[r], cols[k]);
    std::vector<std::size_t> all(minor.dim);
    for (std::size_t k = 0; k < minor.dim; ++k) all[k] = k;
    LaurentPoly term = pivot * subdet(minor, all);
    if (c % 2 == 1) term = -term;
    det += term;
  }
  return det;
}

void for_each_subset(std::size_t dim, std::size_t k, std::size_t start,
                     std::vector<std::size_t>& cur,
                     const std::function<void(const std::vector<std::size_t>&)>&
                         fn) {
  if (cur.size() == k) {
    fn(cur);
    return;
  }
  for (std::size_t v = start; v + (k - cur.size()) <= dim; ++v) {
    cur.push_back(v);
    for_each_subset(dim, k, v + 1, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

LaurentPoly principal_minor_sum(const LaurentMatrix& a, std::size_t k) {
  if (k == 0) return LaurentPoly::constant(1);
  if (k > a.dim) return LaurentPoly{};
  LaurentPoly sum;
  std::vector<std::size_t> cur;
  for_each_subset(a.dim, k, 0, cur,
                  [&](const std::vector<std::size_t>& idx) {
                    sum += subdet(a, idx);
                  });
  return sum;
}

bool pm_trace_identity_check(const LaurentMatrix& a, int d) {
  if (d < 1) throw UsageError("pm_trace_identity_check: d must be positive");
  const LaurentPoly lhs = mat_pow(a, d).trace();
  // Cache the minor sums; block lengths never exceed the dimension.
  std::vector<LaurentPoly> pm(a.dim + 1);
  for (std::size_t k = 1; k <= a.dim; ++k) pm[k] = principal_minor_sum(a, k);
  LaurentPoly rhs;
  for (const Partition& part :
       enumerate_partitions_capped(d, static_cast<int>(a.dim))) {
    LaurentPoly prod = LaurentPoly::constant(1);
    for (const Block& blk : part.blocks)
      prod *= pm[static_cast<std::size_t>(blk.length())];
    if ((d + part.blocks.size()) % 2 == 1) prod = -prod;
    rhs += prod;
  }
  return lhs == rhs;
}

}  // namespace braidlef
