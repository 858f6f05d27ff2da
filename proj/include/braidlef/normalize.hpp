#pragma once

// Conjugacy normal form for braids on n >= 3 strands.
//
// Every braid is conjugate to theta^mu beta(I) for an integer mu and a tuple
// I of positive integers (empty exactly when the braid acts as a pure power
// of the full twist). normalize() computes such a form together with an
// explicit conjugator gamma so that the input equals
// gamma^{-1} theta^mu beta(I) gamma as a mapping class; verify() checks that
// through the action. The form is not unique; only verify() is contractual.

#include <vector>

#include "braidlef/braid.hpp"

namespace braidlef {

struct NormalForm {
  long long mu = 0;
  std::vector<long long> I;  // entries >= 1; empty in the central-only case
  BraidWord gamma;           // never reduced; may be long
  int n = 0;
  bool central_only = false;  // set iff I is empty
};

NormalForm normalize(const BraidWord& b);

// gamma^{-1} theta^mu beta(I) gamma as a braid word.
BraidWord normal_form_braid(const NormalForm& nf);

// True when normal_form_braid(nf) and b induce the same automorphism of F_n.
bool verify(const NormalForm& nf, const BraidWord& b);

}  // namespace braidlef
