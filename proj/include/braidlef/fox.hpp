#pragma once

// Fox free differential calculus on F_n and the Jacobian matrices of braid
// automorphisms.
//
// Derivatives are taken with respect to the a-basis generators. The operator
// d/da_j is linear, satisfies d(uv) = du + u dv on words, and sends a_i to
// delta_{ij}. The Jacobian J(b)_{ij} = d(a_i^b)/da_j always has last row
// (0, ..., 0, e) because a_n is fixed; the reduced matrix drops the last row
// and column.

#include <vector>

#include "braidlef/braid.hpp"
#include "braidlef/groupring.hpp"

namespace braidlef {

RingElem fox_derivative(const FreeWord& w, int j);
RingElem fox_derivative(const RingElem& x, int j);

// All n derivatives of one word in a single left-to-right scan with a shared
// prefix accumulator; row i of the Jacobian is fox_row(a_i^b, n).
std::vector<RingElem> fox_row(const FreeWord& w, int n);

RingMatrix jacobian(const BraidWord& b);
RingMatrix reduced_jacobian(const BraidWord& b);

// The (n-1) x (n-1) matrix A_m whose image under the beta(m) action is the
// reduced Jacobian of beta(m) = sigma_1^m rho. First row
// (G_m, -g_m, -(G_m a_2^-1 + g_{m-1}), 0, ...) where G_m = g_2 + ... + g_m,
// then -a_{i} down the first column and e on the superdiagonal from row 2 on.
// For n = 3 the first row is truncated to its first two entries.
RingMatrix lemma3_matrix(long long m, int n);

}  // namespace braidlef
