#include "starcrit/critical.hpp"

#include <algorithm>
#include <stdexcept>

#include "starcrit/factor.hpp"

namespace starcrit {

std::string to_string(CriticalMethod m) {
  switch (m) {
    case CriticalMethod::fast_formula: return "fast-formula";
    case CriticalMethod::snf_oracle: return "snf-oracle";
    case CriticalMethod::two_unit_r_shortcut: return "two-unit-r-shortcut";
  }
  return "?";
}

std::string CheckReport::message() const {
  std::string s;
  for (const auto &line : lines) {
    s += line;
    s += '\n';
  }
  return s;
}

CriticalGroupResult critical_star(const DhatVector &dhat) {
  FiniteAbelianGroup g = dhat.n() == 1 ? FiniteAbelianGroup{}
                                       : cancel_square(dhat.entries(), dhat.r0());
  BigInt ord = g.order();
  return {std::move(g), CriticalMethod::fast_formula, std::move(ord)};
}

CriticalGroupResult critical_complete(const std::vector<BigInt> &d) {
  std::vector<BigInt> shifted;
  shifted.reserve(d.size());
  for (const BigInt &v : d) {
    if (v < 1) throw std::invalid_argument("critical_complete: d-values must be positive");
    shifted.push_back(v + 1);
  }
  DhatVector image(shifted);  // throws when the reciprocals do not sum to an integer
  if (image.d0() != 1)
    throw std::invalid_argument("critical_complete: not a structure on K_n (sum 1/(d_i+1) = " +
                                image.d0().get_str() + ", expected 1)");
  CriticalGroupResult res = critical_star(image);
  return res;
}

CriticalGroupResult critical_star_oracle(const DhatVector &dhat, std::size_t oracle_bound) {
  if (dhat.n() > oracle_bound)
    throw std::invalid_argument("critical_star_oracle: n exceeds oracle bound");
  SnfResult s = snf(laplacian(dhat_to_structure(dhat)));
  const std::size_t zeros = s.diagonal.size() - s.rank;
  if (zeros != 1)
    throw std::logic_error("star Laplacian must have corank 1, got " + std::to_string(zeros));
  FiniteAbelianGroup g = FiniteAbelianGroup::from_cyclic_orders(s.nontrivial());
  BigInt ord = g.order();
  return {std::move(g), CriticalMethod::snf_oracle, std::move(ord)};
}

BigInt critical_order(const DhatVector &dhat) {
  const std::size_t n = dhat.n();
  if (n == 1) return 1;
  BigInt num = big_pow(dhat.r0(), static_cast<unsigned long>(n - 2));
  BigInt den = 1;
  for (const BigInt &ri : dhat.leaf_r()) den *= ri;
  if (!divides(den, num))
    throw std::logic_error("order formula did not divide exactly for " +
                           join(dhat.entries(), ","));
  return divexact(num, den);
}

std::optional<CriticalGroupResult> critical_two_unit_r(const DhatVector &dhat) {
  const std::vector<BigInt> &e = dhat.entries();
  std::size_t at_r0 = 0;
  for (const BigInt &d : e)
    if (d == dhat.r0()) ++at_r0;
  if (at_r0 < 2) return std::nullopt;
  std::vector<BigInt> rest;
  std::size_t dropped = 0;
  for (const BigInt &d : e) {
    if (d == dhat.r0() && dropped < 2) {
      ++dropped;
      continue;
    }
    rest.push_back(d);
  }
  FiniteAbelianGroup g = FiniteAbelianGroup::from_cyclic_orders(rest);
  BigInt ord = g.order();
  return CriticalGroupResult{std::move(g), CriticalMethod::two_unit_r_shortcut, std::move(ord)};
}

BigInt subset_product_gcd(const std::vector<BigInt> &entries, std::size_t k) {
  if (k < 2 || k - 2 > entries.size())
    throw std::invalid_argument("subset_product_gcd: k out of range");
  const std::size_t take = k - 2;
  if (take == 0) return 1;
  BigInt g = 0;
  std::vector<std::size_t> idx(take);
  for (std::size_t i = 0; i < take; ++i) idx[i] = i;
  while (true) {
    BigInt prod = 1;
    for (std::size_t i : idx) prod *= entries[i];
    g = big_gcd(g, prod);
    if (g == 1) return g;
    // advance combination
    std::size_t i = take;
    while (i-- > 0) {
      if (idx[i] < entries.size() - take + i) {
        ++idx[i];
        for (std::size_t j = i + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return g;
    }
  }
}

CheckReport verify_minor_lemmas(const DhatVector &dhat, std::size_t oracle_bound) {
  const std::size_t n = dhat.n();
  if (n > oracle_bound)
    throw std::invalid_argument("verify_minor_lemmas: n exceeds oracle bound");
  CheckReport rep;

  IntMatrix b(n + 3, n + 3);
  {
    IntMatrix lap = laplacian(dhat_to_structure(dhat));
    for (std::size_t i = 0; i < n + 1; ++i)
      for (std::size_t j = 0; j < n + 1; ++j) b(i, j) = lap(i, j);
    b(n + 1, n + 1) = dhat.r0();
    b(n + 2, n + 2) = dhat.r0();
  }
  std::vector<BigInt> cdiag = dhat.entries();
  cdiag.push_back(1);
  cdiag.push_back(1);
  cdiag.push_back(0);
  IntMatrix c = IntMatrix::diagonal(cdiag);

  auto expect = [&rep](const std::string &what, const BigInt &got, const BigInt &want) {
    if (got == want) {
      rep.lines.push_back(what + " = " + got.get_str() + " ok");
    } else {
      rep.ok = false;
      rep.lines.push_back(what + " = " + got.get_str() + " MISMATCH, expected " + want.get_str());
    }
  };

  for (std::size_t k = 0; k <= 1; ++k) {
    expect("D_" + std::to_string(k) + "(B)", minors_gcd(b, k), 1);
    expect("D_" + std::to_string(k) + "(C)", minors_gcd(c, k), 1);
  }
  for (std::size_t k = 2; k <= n + 2; ++k) {
    BigInt gk = subset_product_gcd(dhat.entries(), k);
    expect("D_" + std::to_string(k) + "(B) vs G_" + std::to_string(k), minors_gcd(b, k), gk);
    expect("D_" + std::to_string(k) + "(C) vs G_" + std::to_string(k), minors_gcd(c, k), gk);
  }
  expect("D_" + std::to_string(n + 3) + "(B)", minors_gcd(b, n + 3), 0);
  expect("D_" + std::to_string(n + 3) + "(C)", minors_gcd(c, n + 3), 0);
  return rep;
}

CheckReport verify_lemma_primes(const DhatVector &dhat) {
  if (dhat.n() < 2)
    throw std::invalid_argument("verify_lemma_primes: n >= 2 required");
  CheckReport rep;
  Factorization r0f;
  for (const BigInt &d : dhat.entries())
    for (const auto &[p, e] : factorize(d)) {
      auto it = r0f.find(p);
      if (it == r0f.end() || it->second < e) r0f[p] = e;
    }
  for (const auto &[p, a] : r0f) {
    BigInt pa = big_pow(p, a);
    std::size_t hits = 0;
    for (const BigInt &d : dhat.entries())
      if (divides(pa, d)) ++hits;
    if (hits >= 2) {
      rep.lines.push_back(p.get_str() + "^" + std::to_string(a) + " divides " +
                          std::to_string(hits) + " entries ok");
    } else {
      rep.ok = false;
      rep.lines.push_back(p.get_str() + "^" + std::to_string(a) + " divides only " +
                          std::to_string(hits) + " entries MISMATCH");
    }
  }
  return rep;
}

}  // namespace starcrit
