#pragma once

// Boundary rotation data and dynamical certificates, all computed as pure
// arithmetic on the conjugacy normal form (mu, I, n). Nothing topological is
// constructed; every claim stays inside the hypotheses of the statements
// implemented here.

#include <string>
#include <vector>

#include "braidlef/braid.hpp"
#include "braidlef/normalize.hpp"

namespace braidlef {

struct RotationData {
  long long m = 1;   // least period of periodic points on the outer boundary
  long long nu = 0;  // rotation count along one least-period orbit
  // nu/m reduced modulo 1, with representative in [0, 1).
  long long rot_num = 0;
  long long rot_den = 1;
};

// For a braid conjugate to theta^mu beta(I) with (n >= 4 and all i_l >= 2)
// or (n = 3 and all i_l >= 3):
//   m = LCM(d, n-2)/d,   nu = m*mu + LCM(d, n-2)/(n-2).
// The hypothesis is essential: beta(2) in B_3 is finite-order with boundary
// period 3, not matching this formula, and is rejected. nu depends on the
// isotopy normalization only modulo m; it is reported as computed from the
// given mu.
RotationData rotation_data(const NormalForm& nf);

struct PseudoAnosovCertificate {
  bool certified = false;
  std::vector<std::string> reasons;  // one verdict per hypothesis
  std::string statement;             // set only when certified
};

// Sufficient conditions: n >= 5, every i_l >= 2, all exponents of one
// parity, and gcd(n-2, d) = 1. Then theta^mu beta(I) is pseudo-Anosov with
// foliations having no interior singularities. The n >= 5 bound is sharp:
// for n = 4, I = (2) the braid is conjugate to rho sigma_3 sigma_2, which
// corresponds to a reducible homeomorphism.
PseudoAnosovCertificate pseudo_anosov_certificate(
    const std::vector<long long>& I, int n);

struct CyclicityReport {
  std::vector<int> permutation;  // image positions of strands 1..n
  bool is_n_cycle = false;
  bool n_prime = false;
  long long exponent_sum = 0;  // sum of letter signs
  bool divisible_by_n_minus_1 = false;
  // Classical sufficient conditions, reported as informational flags: a
  // prime-index cyclic braid is irreducible, and if additionally the
  // exponent sum is not divisible by n-1 the class is pseudo-Anosov.
  bool irreducible_flag = false;
  bool pseudo_anosov_flag = false;
  std::vector<std::string> notes;
};

CyclicityReport cyclicity_report(const BraidWord& b);

}  // namespace braidlef
