#ifndef STARCRIT_CONSTRUCT_HPP
#define STARCRIT_CONSTRUCT_HPP

#include <map>
#include <optional>
#include <vector>

#include "starcrit/abelian.hpp"
#include "starcrit/structures.hpp"

namespace starcrit {

// Sylvester's sequence s_1 = 2, s_{k+1} = s_k^2 - s_k + 1 and its companion
// a_1 = 1, a_k = a_{k-1}^2 + a_{k-1}; a_k = s_k - 1 = s_1 s_2 ... s_{k-1}.
BigInt sylvester_s(std::size_t k);
BigInt sylvester_a(std::size_t k);

// The structure (s_1, ..., s_{n-1}, a_n): d0 = 1 and trivial critical group,
// with the largest possible final entry for its length.
DhatVector sylvester_trivial(std::size_t n);

// Splits the largest entry: 1/d_n = 1/(d_n + a) + a/(d_n (d_n + a)) for any
// a dividing d_n, growing the star by one leaf with d0 unchanged.
DhatVector d_a_expand(const DhatVector &dhat, const BigInt &a);

// When gcd(r0/d_n, d_n/a + 1) = 1, the expansion adds a Z/a summand; the
// returned group is cross-checked against the direct computation on the
// expanded vector. nullopt when the gcd hypothesis fails (the expansion is
// still valid, the group law is just not asserted).
std::optional<FiniteAbelianGroup> d_a_group_law(const DhatVector &dhat, const BigInt &a);

struct CyclicConstruction {
  DhatVector dhat;
  FiniteAbelianGroup group;
};

// Z/c for a squarefree product c of primes dividing Sylvester's sequence.
// The witness maps each prime p of c to an index m with p dividing one of
// s_1, ..., s_m (equivalently p | a_{m+1}); the check is on a_{m+1} so any
// index at or beyond the first occurrence is accepted.
CyclicConstruction sylvester_prime_cyclic(const BigInt &c,
                                          const std::map<BigInt, std::size_t> &witness);

// Merged entries; d0 adds. The critical group K' + K'' + (Z/gcd(r0', r0''))^2
// is asserted against the direct computation.
DhatVector concatenate(const DhatVector &d1, const DhatVector &d2);

struct EmbedResult {
  DhatVector dhat;
  FiniteAbelianGroup full_group;  // G + (Z/r0)^ell
  BigInt r0;
  BigInt ell;
};

// Realizes the group with the given cyclic pieces (each >= 2) as a direct
// summand of a star critical group: entries are the pieces plus ell + 2
// copies of r0 = lcm(pieces), with ell chosen so the reciprocals sum to an
// integer. Pieces are used as written; refining them into prime powers gives
// a smaller star but the published worked values use the composite pieces.
EmbedResult embed_group(const std::vector<BigInt> &pieces);

// d_i -> d0 d_i, making d0 = 1. Invariant-factor-wise divisibility of the
// old group into the new one is asserted.
DhatVector scale_to_d0_one(const DhatVector &dhat);

// (d0+1, d_1(d0+1), ..., d_n(d0+1)): one more leaf, rank grows to n-1. The
// group law Z/(d0+1) + sum Z/(alpha_k (d0+1)) is asserted for n >= 2.
DhatVector double_structure(const DhatVector &dhat);

struct ExtremalCandidates {
  // (a_1+1, ..., a_{n-3}+1, 3a_{n-2}, 3a_{n-2}, 3a_{n-2}), |K| = 3 a_{n-2}^2;
  // requires n >= 5.
  std::optional<DhatVector> order_maximizer;
  BigInt order_value;
  // (a_1+1, ..., a_{n-2}+1, 2a_{n-1}, 2a_{n-1}), K = Z/a_{n-1}; n >= 4.
  DhatVector cyclic_maximizer;
  BigInt cyclic_value;
};

ExtremalCandidates extremal_candidates(std::size_t n);

}  // namespace starcrit

#endif
