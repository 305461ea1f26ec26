#ifndef STARCRIT_NUMERIC_HPP
#define STARCRIT_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace starcrit {

// Exact integer of unbounded magnitude. Everything arithmetic in this
// project flows through this type; there is no silent overflow anywhere.
using BigInt = mpz_class;

inline BigInt big_gcd(const BigInt &a, const BigInt &b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt big_lcm(const BigInt &a, const BigInt &b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline BigInt big_abs(const BigInt &a) {
  BigInt r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline BigInt big_pow(const BigInt &base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// Quotient a/b when b is known to divide a exactly.
inline BigInt divexact(const BigInt &a, const BigInt &b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const BigInt &d, const BigInt &a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Multiplicity of b (> 1) in a (> 0): largest e with b^e | a.
inline unsigned multiplicity(BigInt a, const BigInt &b) {
  unsigned e = 0;
  while (divides(b, a)) {
    a = divexact(a, b);
    ++e;
  }
  return e;
}

inline BigInt parse_bigint(const std::string &s) {
  BigInt v;
  if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
  return v;
}

// "2,3,6" -> {2, 3, 6}; used by the CLI for d-vectors and group orders.
std::vector<BigInt> parse_bigint_list(const std::string &s);

std::string join(const std::vector<BigInt> &values, const std::string &sep);

}  // namespace starcrit

#endif
