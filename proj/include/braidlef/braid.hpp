#pragma once

// Braid words on n strands and the Artin action on F_n.
//
// A braid acts on words on the right; letters apply left to right, so
// act(compose(b1, b2), w) == act(b2, act(b1, w)).  On the a-basis the
// generator sigma_i sends a_i to a_{i+1} a_i^{-1} a_{i-1} and fixes every
// other a_j (a_0 = e); a_n is fixed by the whole group.

#include <string>
#include <vector>

#include "braidlef/freeword.hpp"

namespace braidlef {

struct BraidWord {
  int n = 0;                 // number of strands
  std::vector<int> letters;  // +i for sigma_i, -i for sigma_i^{-1}, 1 <= i <= n-1

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Whitespace-separated nonzero integers, e.g. "1 -2". Empty text (or "e")
// is the trivial braid.
BraidWord parse_braid(const std::string& text, int n);
std::string braid_str(const BraidWord& b);

BraidWord compose(const BraidWord& b1, const BraidWord& b2);
BraidWord inverse(const BraidWord& b);
BraidWord power(const BraidWord& b, long long k);

// rho = sigma_{n-1} ... sigma_2 sigma_1.
BraidWord rho(int n);
// theta = (sigma_1 sigma_2 ... sigma_{n-1})^n, the full twist; central,
// and equal to rho^n and to (sigma_1 rho)^{n-1}.
BraidWord theta(int n);
// beta(i) = sigma_1^i rho.
BraidWord beta_atom(long long i, int n);
// beta(I) = beta(i_1) ... beta(i_d).
BraidWord beta_seq(const std::vector<long long>& I, int n);

FreeWord act(const BraidWord& b, const FreeWord& w);

// perm[i-1] is the end position of the strand starting at position i.
std::vector<int> induced_permutation(const BraidWord& b);

// True when both braids induce the same automorphism of F_n, i.e. the same
// image on every a_i. This is equality as mapping classes of the punctured
// disk rel boundary.
bool equal_via_action(const BraidWord& b1, const BraidWord& b2);

}  // namespace braidlef
