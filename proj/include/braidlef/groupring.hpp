#pragma once

// Elements and square matrices of the integral group ring Z[F_n].
//
// An element is a finite sum of integer multiples of reduced words, stored
// sorted by the canonical word order. Words are kept in the a-basis
// internally; from_word converts on ingest. Coefficients are exact
// arbitrary-precision integers. The ring is noncommutative: products keep
// the left factor's words on the left.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braidlef/braid.hpp"
#include "braidlef/freeword.hpp"

namespace braidlef {

using Int = boost::multiprecision::cpp_int;

class RingElem {
 public:
  RingElem() = default;  // zero of rank 0; adopts a rank on first use
  explicit RingElem(int n) : n_(n) {}

  static RingElem zero(int n) { return RingElem(n); }
  static RingElem one(int n);
  static RingElem from_word(const FreeWord& w, Int coeff = 1);

  int rank() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<FreeWord, Int>& terms() const { return terms_; }
  Int coeff(const FreeWord& w) const;

  // Adds c*w, erasing the term if the coefficient cancels to zero.
  void add_term(const FreeWord& w, const Int& c);

  RingElem& operator+=(const RingElem& rhs);
  RingElem& operator-=(const RingElem& rhs);
  RingElem& operator*=(const RingElem& rhs);
  friend RingElem operator+(RingElem a, const RingElem& b) { a += b; return a; }
  friend RingElem operator-(RingElem a, const RingElem& b) { a -= b; return a; }
  friend RingElem operator*(RingElem a, const RingElem& b) { a *= b; return a; }
  RingElem operator-() const;
  friend RingElem operator*(const Int& c, const RingElem& x);
  friend bool operator==(const RingElem& a, const RingElem& b) {
    return a.terms_ == b.terms_;
  }

  // "a2 - 3 a1 a2^-1" style; "0" for zero, bare coefficients for e-terms.
  std::string str() const;

 private:
  int n_ = 0;
  std::map<FreeWord, Int> terms_;
  void adopt_rank(const RingElem& other);
};

// Applies the braid action to every word of x; a ring endomorphism.
RingElem apply_aut(const RingElem& x, const BraidWord& b);

struct RingMatrix {
  int n = 0;          // group-ring rank
  std::size_t dim = 0;
  std::vector<RingElem> entry;  // row-major, dim*dim

  static RingMatrix zero(int n, std::size_t dim);
  static RingMatrix identity(int n, std::size_t dim);

  RingElem& at(std::size_t i, std::size_t j) { return entry[i * dim + j]; }
  const RingElem& at(std::size_t i, std::size_t j) const {
    return entry[i * dim + j];
  }
  RingElem trace() const;

  friend bool operator==(const RingMatrix&, const RingMatrix&) = default;
};

// Entries multiply with the left factor's entries on the left.
RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
RingMatrix operator+(const RingMatrix& a, const RingMatrix& b);
RingMatrix mat_apply_aut(const RingMatrix& m, const BraidWord& b);

}  // namespace braidlef
