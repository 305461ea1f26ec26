#ifndef STARCRIT_CRITICAL_HPP
#define STARCRIT_CRITICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "starcrit/abelian.hpp"
#include "starcrit/structures.hpp"

namespace starcrit {

enum class CriticalMethod { fast_formula, snf_oracle, two_unit_r_shortcut };

std::string to_string(CriticalMethod m);

struct CriticalGroupResult {
  FiniteAbelianGroup group;
  CriticalMethod method;
  BigInt order;
};

// Exhaustive-minor computations explode past this; the guard applies to the
// SNF oracle and the minor-lemma verifier.
inline constexpr std::size_t kDefaultOracleBound = 12;

// Critical group of the star structure determined by d-hat, via the
// cancellation K + (Z/r0)^2 = sum Z/d_i. Trivial for n = 1.
CriticalGroupResult critical_star(const DhatVector &dhat);

// Critical group on K_n from the d-labels alone: shift to d_i + 1, cancel
// against lcm(d_i + 1). Throws if (d, r) is not a structure on K_n.
CriticalGroupResult critical_complete(const std::vector<BigInt> &d);

// Independent path: Smith normal form of the (n+1) x (n+1) star Laplacian.
// The diagonal must contain exactly one zero.
CriticalGroupResult critical_star_oracle(const DhatVector &dhat,
                                         std::size_t oracle_bound = kDefaultOracleBound);

// Lorenzini's order formula r0^(n-2) / (r_1 ... r_n), evaluated exactly.
BigInt critical_order(const DhatVector &dhat);

// When two leaves carry r-value 1 (equivalently two entries equal r0), the
// critical group is the direct sum over the remaining leaves. nullopt when
// fewer than two entries equal r0.
std::optional<CriticalGroupResult> critical_two_unit_r(const DhatVector &dhat);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> lines;  // one row per checked quantity

  std::string message() const;
};

// Verifies D_k(B(d)) = D_k(C(d)) = G_k(d-hat) for k = 2..n+2 by exhaustive
// minors, plus D_0 = D_1 = 1 and D_{n+3} = 0, where B adjoins two r0 blocks
// to the Laplacian and C = diag(d_1, ..., d_n, 1, 1, 0).
CheckReport verify_minor_lemmas(const DhatVector &dhat,
                                std::size_t oracle_bound = kDefaultOracleBound);

// For each maximal prime power p^a dividing r0, confirms at least two
// entries of d-hat are divisible by p^a.
CheckReport verify_lemma_primes(const DhatVector &dhat);

// gcd of all products of k-2 entries of d-hat (the G_k of the minor checks).
BigInt subset_product_gcd(const std::vector<BigInt> &entries, std::size_t k);

}  // namespace starcrit

#endif
