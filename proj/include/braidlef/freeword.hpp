#pragma once

// Freely reduced words in the free group F_n.
//
// Two generator systems are used side by side: the puncture loops
// xi_1, ..., xi_n and the partial products a_i = xi_1 ... xi_i
// (with a_0 = e by convention, so xi_i = a_{i-1}^{-1} a_i).
// A word knows its rank n and which basis its syllables refer to;
// operations never mix bases implicitly.

#include <string>
#include <vector>

#include "braidlef/errors.hpp"

namespace braidlef {

enum class Basis { xi, a };

// One maximal run g^e of a single generator. exp is nonzero in a reduced word.
struct Syllable {
  int gen = 0;
  long long exp = 0;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

class FreeWord {
 public:
  FreeWord() = default;  // identity of rank 0; adopts a rank on first use
  FreeWord(int n, Basis basis);

  static FreeWord identity(int n, Basis basis);
  static FreeWord generator(int n, Basis basis, int gen, long long exp = 1);
  static FreeWord parse(const std::string& text, int n, Basis basis);

  int rank() const { return n_; }
  Basis basis() const { return basis_; }
  const std::vector<Syllable>& syllables() const { return syl_; }
  bool is_identity() const { return syl_.empty(); }
  std::size_t syllable_count() const { return syl_.size(); }
  // Total letter count, sum of |exp| over syllables.
  long long letter_length() const;

  // Appends g^e and restores free reduction (merges or cancels with the tail).
  void append(int gen, long long exp);

  FreeWord& operator*=(const FreeWord& rhs);
  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs) {
    lhs *= rhs;
    return lhs;
  }
  FreeWord inverse() const;
  FreeWord pow(long long k) const;

  // Exponent sum with respect to the xi generators; e(a_i) = i, so in the
  // a-basis this is sum(exp * gen). Invariant under the braid action.
  long long exponent_sum() const;

  FreeWord to_basis(Basis target) const;

  // Canonical order: syllable count first, then (gen, exp) lexicographically.
  // Used as the term order of group-ring elements and for serialization.
  friend bool operator<(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord& a, const FreeWord& b);

  // "a1 a2^-3" / "x2^5" / "e" for the identity.
  std::string str() const;

 private:
  int n_ = 0;
  Basis basis_ = Basis::a;
  std::vector<Syllable> syl_;
};

}  // namespace braidlef
