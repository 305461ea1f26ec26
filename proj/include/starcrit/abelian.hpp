#ifndef STARCRIT_ABELIAN_HPP
#define STARCRIT_ABELIAN_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "starcrit/numeric.hpp"

namespace starcrit {

// Finite abelian group in invariant-factor form: factors nondecreasing,
// each >= 2, each dividing the next. The trivial group is the empty
// sequence (never {1}), so canonical equality is plain sequence equality.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;

  // Canonical form of Z/orders[0] + Z/orders[1] + ...; order-1 summands
  // vanish. Accepts any positive orders, in any order.
  static FiniteAbelianGroup from_cyclic_orders(const std::vector<BigInt> &orders);

  const std::vector<BigInt> &invariant_factors() const { return factors_; }
  bool trivial() const { return factors_.empty(); }

  BigInt order() const;
  BigInt exponent() const { return factors_.empty() ? BigInt(1) : factors_.back(); }
  std::size_t rank() const { return factors_.size(); }

  // "trivial" or "Z/a1 x Z/a2 x ...".
  std::string str() const;

  // Decimal strings, one per invariant factor.
  std::vector<std::string> to_decimal_strings() const;

  friend bool operator==(const FiniteAbelianGroup &a, const FiniteAbelianGroup &b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator!=(const FiniteAbelianGroup &a, const FiniteAbelianGroup &b) {
    return !(a == b);
  }
  // Total order so survey output is deterministic and sortable.
  friend bool operator<(const FiniteAbelianGroup &a, const FiniteAbelianGroup &b);

 private:
  std::vector<BigInt> factors_;
};

FiniteAbelianGroup direct_sum(const FiniteAbelianGroup &g, const FiniteAbelianGroup &h);

// Solves K from K + (Z/r0)^2 = sum of Z/orders[i]: for each prime power in
// r0 the two largest exponents among the orders are cancelled. Validates the
// consequence of the prime lemma (the maximal exponent matches r0 and occurs
// at least twice) and throws std::invalid_argument("not a valid star
// structure spectrum...") when the orders did not come from a star structure.
FiniteAbelianGroup cancel_square(const std::vector<BigInt> &orders, const BigInt &r0);

// p -> nondecreasing exponents e with the group containing + Z/p^e.
struct PrimaryDecomposition {
  std::map<BigInt, std::vector<unsigned>> components;

  bool operator==(const PrimaryDecomposition &o) const { return components == o.components; }
};

// These two require factoring the invariant factors and round-trip exactly.
PrimaryDecomposition to_primary(const FiniteAbelianGroup &g,
                                const std::vector<BigInt> &factor_hints = {});
FiniteAbelianGroup from_primary(const PrimaryDecomposition &pd);

// Pairwise-coprime basis (factor refinement) of the given positive values:
// every input is exactly a product of powers of basis elements. This is what
// lets group canonicalization work without ever factoring into primes.
std::vector<BigInt> coprime_basis(const std::vector<BigInt> &values);

}  // namespace starcrit

#endif
