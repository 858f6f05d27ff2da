#pragma once

// Exact Laurent-polynomial arithmetic over Z, the abelianization
// T: ZF_n -> Z[t, t^-1] sending every puncture loop xi_j to t, reduced
// Burau matrices, and the principal-minor expansion of tr A^d.
//
// The Burau convention here is T applied entrywise to the reduced Fox
// Jacobian in the a-basis. Other sources may differ by transposition or a
// variable substitution; everything in this project uses this convention
// end to end. Because the braid action preserves exponent sums, T kills
// the twisting in the Jacobian chain rule and the matrix is multiplicative
// in the braid word.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "braidlef/braid.hpp"
#include "braidlef/groupring.hpp"

namespace braidlef {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(const Int& c);
  static LaurentPoly t_power(long long e, const Int& coeff = 1);

  bool is_zero() const { return c_.empty(); }
  const std::map<long long, Int>& coeffs() const { return c_; }
  Int coeff(long long e) const;
  // Adds c*t^e, erasing the monomial if the coefficient cancels.
  void add_term(long long e, const Int& c);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) {
    a *= b;
    return a;
  }
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.c_ == b.c_;
  }

  // "2t^-1 - t^3"; ascending exponents, unit coefficients elided.
  std::string str() const;
  // "-t^2+t^3"; same order, no spaces.
  std::string str_compact() const;

 private:
  std::map<long long, Int> c_;
};

// Each word maps to t raised to its exponent sum; a ring homomorphism.
LaurentPoly abelianize(const RingElem& x);

struct LaurentMatrix {
  std::size_t dim = 0;
  std::vector<LaurentPoly> entry;  // row-major, dim*dim

  static LaurentMatrix zero(std::size_t dim);
  static LaurentMatrix identity(std::size_t dim);

  LaurentPoly& at(std::size_t i, std::size_t j) { return entry[i * dim + j]; }
  const LaurentPoly& at(std::size_t i, std::size_t j) const {
    return entry[i * dim + j];
  }
  LaurentPoly trace() const;

  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;
};

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix mat_pow(const LaurentMatrix& a, long long k);

// T applied entrywise to the reduced Fox Jacobian of the braid.
LaurentMatrix reduced_burau(const BraidWord& b);

// The (n-1)x(n-1) matrix of one letter sigma_i^{+-1}, written down directly:
// the positive letter's row i holds t at column i-1, -t at column i, and 1
// at column i+1 (columns outside 1..n-1 dropped); the negative letter's row
// holds 1, -t^-1, t^-1 at the same columns. All other rows are identity.
LaurentMatrix burau_letter(int letter, int n);

// Product of per-letter matrices; an independent route to reduced_burau.
LaurentMatrix burau_direct(const BraidWord& b);

// Sum of the order-k principal minors; 1 for k = 0, 0 for k > dim.
LaurentPoly principal_minor_sum(const LaurentMatrix& a, std::size_t k);

// Exact check of the cyclic-partition expansion of tr A^d: the trace of the
// d-th power equals the sum over partitions of Z_d into cyclic blocks of
// length at most dim of (-1)^(d + number of blocks) times the product of
// principal-minor sums of the block lengths.
bool pm_trace_identity_check(const LaurentMatrix& a, int d);

}  // namespace braidlef
