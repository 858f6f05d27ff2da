#pragma once

// The generalized Lefschetz number of a braid-induced homeomorphism of the
// punctured disk, computed two independent ways: a partition formula over
// cyclic block partitions of Z_d driven by the normal form theta^mu beta(I),
// and the Fox-trace route -tr Jbar(beta) that works on any braid word.
// Also: Nielsen-number bounds and the refined partition counts behind them.
//
// Reidemeister classes are reported raw, not canonically merged; two terms
// of a representative may name the same fixed point class. An optional
// bounded twisted-conjugacy search can merge terms it can prove equivalent.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidlef/braid.hpp"
#include "braidlef/groupring.hpp"
#include "braidlef/normalize.hpp"

namespace braidlef {

// Coefficient words: c_j = a_2^{j/2} for even j, a_1 a_2^{(j-1)/2} for odd
// j, so the exponent sum of c_j is j. g_j = (-1)^{j+1} c_j.
FreeWord c_word(long long j, int n);
RingElem g_elem(long long j, int n);
// g_lo + ... + g_hi, zero when hi < lo.
RingElem g_sum(long long lo, long long hi, int n);

// A block in Z_d is the cyclic interval p, p+1, ..., q; p > q wraps through
// d back around to q. Lengths run from 1 to n-1.
struct Block {
  int p = 1;
  int q = 1;
  int d = 1;

  bool wraps() const { return p > q; }
  int length() const { return p <= q ? q - p + 1 : d - p + 1 + q; }
  friend bool operator==(const Block&, const Block&) = default;
};

// Disjoint blocks covering Z_d, at most one of them wrapping, kept sorted by
// initial element.
struct Partition {
  std::vector<Block> blocks;
  friend bool operator==(const Partition&, const Partition&) = default;
};

std::string block_str(const Block& b);
std::string partition_str(const Partition& p);

// All partitions of Z_d into blocks of length at most cap. Deterministic
// order: partitions with a wraparound block first (by its start), then
// lexicographic by block starts.
std::vector<Partition> enumerate_partitions_capped(int d, int cap);
// Block-length cap n-1, the topologically meaningful case.
std::vector<Partition> enumerate_partitions(int d, int n);
// The refined set: partitions whose cyclically consecutive block lengths
// never form the pair (1, n-2).
std::vector<Partition> enumerate_partitions_prime(int d, int n);

// The twisting braids of a block: alpha(B) = beta_p(I) and omega(B) =
// beta_q(I) for p <= q, beta_q(I) beta(I)^-1 for a wraparound block, where
// beta_l(I) = beta(i_l) ... beta(i_d).
std::pair<BraidWord, BraidWord> alpha_omega(const Block& b,
                                            const std::vector<long long>& I,
                                            int n);

// The block weight W_I(B): (g_0 + ... + g_{i_p-2})^alpha a_{|B|+1}^omega for
// short blocks (zero when i_p = 1), g_{i_p}^alpha a_{n-1}^omega for blocks
// of full length n-1.
RingElem w_block(const std::vector<long long>& I, const Block& b, int n);
// Product of the block weights in order of initial elements.
RingElem w_partition(const std::vector<long long>& I, const Partition& part,
                     int n);

enum class Route { theorem1, foxtrace };

struct LefschetzResult {
  RingElem representative;
  Route route = Route::foxtrace;
  std::optional<NormalForm> normal_form;
  // The term-to-class map is not decided; distinct terms may coincide.
  bool classes_not_distinguished = true;
};

// Partition formula: representative -(a_n^mu sum over partitions of
// W_I(P)^gamma). Rejects the empty-I (central) sentinel.
LefschetzResult theorem1(const NormalForm& nf);

// Fox-trace route: representative -tr(reduced_jacobian(b)), any braid word.
LefschetzResult foxtrace(const BraidWord& b);

// Upper bound for the Nielsen number: sum over partitions of the product of
// per-block term counts (i_p - 1 for short blocks, 1 at full length).
Int nielsen_upper(const std::vector<long long>& I, int n);

// Per-block count in the refined sum: i_p - 1 for short blocks,
// (i_p - 1)(i_{p'} - 1) - 1 at full length, p' the cyclic successor of p.
Int s_block_count(const std::vector<long long>& I, const Block& b, int n);

// Two-sided Nielsen estimate. For n >= 4 (entries >= 2) the refined
// partition sum bounds above and the same sum minus 2n-2 bounds below; for
// n = 3 (entries >= 3) the sequence count sharp_S takes both roles with
// defect 4. The count of distinct exponent sums carrying a nonzero net
// coefficient in the partition-formula representative is an independent
// lower bound; lower reports the max of the two.
struct Theorem2Bounds {
  Int lower = 0;
  Int upper = 0;
  Int refined_sum = 0;  // the partition or sequence count
  Int t_distinct = 0;   // surviving exponent-sum degrees
};
Theorem2Bounds theorem2_bounds(const std::vector<long long>& I, int n);

// Number of d-tuples J with 2 <= j_l <= i_l and no cyclically consecutive
// pair (j_l, j_{l+1}) = (i_l, 2); the n = 3 count. Direct enumeration at
// desk scale, a two-state transfer matrix beyond.
Int s_count_n3(const std::vector<long long>& I);

// Test oracle: the (i, j) entry of the reduced Jacobian of beta(I) in closed
// form, assembled from the segment weights W_k^l, the twisted coefficients
// S_l, G_l and the generator images alpha_q^l.
RingElem lemma5_entry(const std::vector<long long>& I, int i, int j, int n);

// Merges terms of x provably equivalent under w -> u^b w u^-1, searching
// conjugators u with at most `bound` syllables and exponents up to `bound`
// in absolute value. bound = 0 leaves x untouched.
RingElem merge_classes(const RingElem& x, const BraidWord& b, int bound);

}  // namespace braidlef
