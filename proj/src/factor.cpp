#include "starcrit/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace starcrit {

bool is_probable_prime(const BigInt &n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

namespace {

// One Brent-cycle rho round with the given polynomial offset.
BigInt rho_round(const BigInt &n, unsigned long c) {
  BigInt y = 2, x = 2, d = 1, q = 1, ys = 2;
  const unsigned long m = 128;
  unsigned long r = 1;
  auto step = [&](BigInt &v) {
    v = (v * v + c) % n;
  };
  while (d == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    while (k < r && d == 1) {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        step(y);
        q = q * big_abs(x - y) % n;
      }
      d = big_gcd(q, n);
      k += m;
    }
    r *= 2;
    if (r > (1ul << 24)) return n;  // give up this round
  }
  if (d == n) {
    // backtrack one step at a time
    do {
      step(ys);
      d = big_gcd(big_abs(x - ys), n);
    } while (d == 1);
  }
  return d;
}

void factor_rec(const BigInt &n, Factorization &out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  // perfect power?
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long e = 2; e <= mpz_sizeinbase(n.get_mpz_t(), 2); ++e) {
      BigInt root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
        Factorization sub;
        factor_rec(root, sub);
        for (auto &[p, k] : sub) out[p] += k * static_cast<unsigned>(e);
        return;
      }
    }
  }
  for (unsigned long c = 1; c < 64; ++c) {
    BigInt d = rho_round(n, c);
    if (d != n && d != 1) {
      factor_rec(d, out);
      factor_rec(divexact(n, d), out);
      return;
    }
  }
  throw std::runtime_error("factorization budget exhausted for " + n.get_str());
}

}  // namespace

Factorization factorize(const BigInt &n, const std::vector<BigInt> &hints) {
  if (n <= 0) throw std::invalid_argument("factorize: argument must be positive");
  Factorization out;
  BigInt rest = n;
  // hints first; refine composite hints through their gcd with the value
  for (const BigInt &h : hints) {
    if (h <= 1) continue;
    BigInt g = big_gcd(rest, h);
    while (g > 1) {
      if (is_probable_prime(g)) {
        while (divides(g, rest)) {
          rest = divexact(rest, g);
          out[g] += 1;
        }
      } else {
        Factorization sub = factorize(g);
        for (auto &[p, k] : sub) {
          (void)k;
          while (divides(p, rest)) {
            rest = divexact(rest, p);
            out[p] += 1;
          }
        }
      }
      g = big_gcd(rest, h);
    }
  }
  // small trial division
  for (unsigned long p = 2; p < 100000ul && rest > 1; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      out[p] += 1;
    }
  }
  if (rest > 1) {
    if (is_probable_prime(rest))
      out[rest] += 1;
    else
      factor_rec(rest, out);
  }
  return out;
}

std::vector<BigInt> divisors(const BigInt &n, const std::vector<BigInt> &hints) {
  Factorization f = factorize(n, hints);
  std::vector<BigInt> divs{1};
  for (auto &[p, e] : f) {
    const std::size_t base = divs.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace starcrit
