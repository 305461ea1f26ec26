#ifndef STARCRIT_FACTOR_HPP
#define STARCRIT_FACTOR_HPP

#include <map>
#include <vector>

#include "starcrit/numeric.hpp"

namespace starcrit {

// prime -> exponent, primes ascending.
using Factorization = std::map<BigInt, unsigned>;

// Probabilistic in name only at these sizes: GMP runs BPSW plus
// Miller-Rabin rounds, with no known composite below 2^64 passing.
bool is_probable_prime(const BigInt &n);

// Full factorization by trial division, then Pollard-Brent rho on what
// remains. `hints` are candidate divisors worth trying first (constructions
// know most of the prime content of their outputs); non-prime hints are
// refined rather than trusted. Throws std::runtime_error if a composite
// cofactor survives the rho budget; callers that cannot afford that use the
// gcd-splitting canonicalization in abelian.hpp instead, which never factors.
Factorization factorize(const BigInt &n, const std::vector<BigInt> &hints = {});

// All positive divisors, ascending.
std::vector<BigInt> divisors(const BigInt &n, const std::vector<BigInt> &hints = {});

}  // namespace starcrit

#endif
