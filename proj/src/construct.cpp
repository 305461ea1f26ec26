#include "starcrit/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include "starcrit/critical.hpp"
#include "starcrit/factor.hpp"

namespace starcrit {

BigInt sylvester_s(std::size_t k) {
  if (k < 1) throw std::invalid_argument("sylvester_s: index starts at 1");
  BigInt s = 2;
  for (std::size_t i = 1; i < k; ++i) s = s * s - s + 1;
  return s;
}

BigInt sylvester_a(std::size_t k) {
  if (k < 1) throw std::invalid_argument("sylvester_a: index starts at 1");
  BigInt a = 1;
  for (std::size_t i = 1; i < k; ++i) a = a * a + a;
  return a;
}

DhatVector sylvester_trivial(std::size_t n) {
  if (n < 2) throw std::invalid_argument("sylvester_trivial: n >= 2 required");
  std::vector<BigInt> entries;
  BigInt s = 2, prod = 1;
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    entries.push_back(s);
    prod *= s;
    s = s * s - s + 1;
  }
  entries.push_back(prod);  // a_n
  return DhatVector(std::move(entries));
}

DhatVector d_a_expand(const DhatVector &dhat, const BigInt &a) {
  const BigInt dn = dhat.entries().back();
  if (a < 1 || !divides(a, dn))
    throw std::invalid_argument("d_a_expand: a must divide the largest entry " + dn.get_str());
  std::vector<BigInt> entries(dhat.entries().begin(), dhat.entries().end() - 1);
  entries.push_back(dn + a);
  entries.push_back(divexact(dn * (dn + a), a));
  return DhatVector(std::move(entries));
}

std::optional<FiniteAbelianGroup> d_a_group_law(const DhatVector &dhat, const BigInt &a) {
  const BigInt dn = dhat.entries().back();
  if (a < 1 || !divides(a, dn))
    throw std::invalid_argument("d_a_group_law: a must divide the largest entry");
  const BigInt ratio = divexact(dhat.r0(), dn);  // d_n divides r0 = lcm
  const BigInt shifted = divexact(dn, a) + 1;
  if (big_gcd(ratio, shifted) != 1) return std::nullopt;

  DhatVector expanded = d_a_expand(dhat, a);
  FiniteAbelianGroup expected =
      direct_sum(critical_star(dhat).group, FiniteAbelianGroup::from_cyclic_orders({a}));
  FiniteAbelianGroup actual = critical_star(expanded).group;
  if (expected != actual)
    throw std::logic_error("expansion group law violated at a=" + a.get_str() + " on " +
                           join(dhat.entries(), ","));
  if (dhat.r0() == dn) {
    BigInt want = divexact(dn * (dn + a), a);
    if (expanded.r0() != want)
      throw std::logic_error("expansion lcm law violated at a=" + a.get_str());
  }
  return expected;
}

CyclicConstruction sylvester_prime_cyclic(const BigInt &c,
                                          const std::map<BigInt, std::size_t> &witness) {
  if (witness.empty()) throw std::invalid_argument("sylvester_prime_cyclic: empty witness");
  BigInt prod = 1;
  std::size_t max_m = 0;
  for (const auto &[p, m] : witness) {
    if (p < 2 || !is_probable_prime(p))
      throw std::invalid_argument("sylvester_prime_cyclic: witness key " + p.get_str() +
                                  " is not prime");
    if (m < 1) throw std::invalid_argument("sylvester_prime_cyclic: witness index must be >= 1");
    if (!divides(p, sylvester_a(m + 1)))
      throw std::invalid_argument("sylvester_prime_cyclic: " + p.get_str() +
                                  " does not divide any Sylvester term up to s_" +
                                  std::to_string(m));
    prod *= p;
    max_m = std::max(max_m, m);
  }
  if (prod != c)
    throw std::invalid_argument(
        "sylvester_prime_cyclic: c must be the squarefree product of the witness primes");

  DhatVector base = sylvester_trivial(max_m + 1);
  std::optional<FiniteAbelianGroup> law = d_a_group_law(base, c);
  if (!law) throw std::logic_error("sylvester_prime_cyclic: gcd hypothesis unexpectedly failed");
  return {d_a_expand(base, c), *law};
}

DhatVector concatenate(const DhatVector &d1, const DhatVector &d2) {
  std::vector<BigInt> entries = d1.entries();
  entries.insert(entries.end(), d2.entries().begin(), d2.entries().end());
  DhatVector merged(std::move(entries));

  BigInt g = big_gcd(d1.r0(), d2.r0());
  FiniteAbelianGroup expected = direct_sum(
      direct_sum(critical_star(d1).group, critical_star(d2).group),
      FiniteAbelianGroup::from_cyclic_orders({g, g}));
  if (expected != critical_star(merged).group)
    throw std::logic_error("concatenation group law violated");
  return merged;
}

EmbedResult embed_group(const std::vector<BigInt> &pieces) {
  if (pieces.empty()) throw std::invalid_argument("embed_group: group must be nontrivial");
  BigInt r0 = 1;
  for (const BigInt &c : pieces) {
    if (c < 2) throw std::invalid_argument("embed_group: cyclic pieces must be >= 2");
    r0 = big_lcm(r0, c);
  }
  BigInt s = 0;
  for (const BigInt &c : pieces) s += divexact(r0, c);
  BigInt k;
  mpz_cdiv_q(k.get_mpz_t(), BigInt(s + 2).get_mpz_t(), r0.get_mpz_t());
  BigInt ell = k * r0 - s - 2;

  std::vector<BigInt> entries = pieces;
  for (BigInt i = 0; i < ell + 2; ++i) entries.push_back(r0);
  DhatVector dhat(std::move(entries));

  std::vector<BigInt> full = pieces;
  for (BigInt i = 0; i < ell; ++i) full.push_back(r0);
  FiniteAbelianGroup full_group = FiniteAbelianGroup::from_cyclic_orders(full);
  if (full_group != critical_star(dhat).group)
    throw std::logic_error("embed_group: constructed group mismatch");
  return {std::move(dhat), std::move(full_group), std::move(r0), std::move(ell)};
}

namespace {

// invariant factors padded with leading 1s to exactly n-2 slots
std::vector<BigInt> padded_factors(const FiniteAbelianGroup &g, std::size_t n) {
  if (n < 2 || g.rank() > n - 2)
    throw std::logic_error("padded_factors: rank exceeds n - 2");
  std::vector<BigInt> out(n - 2 - g.rank(), BigInt(1));
  const auto &f = g.invariant_factors();
  out.insert(out.end(), f.begin(), f.end());
  return out;
}

}  // namespace

DhatVector scale_to_d0_one(const DhatVector &dhat) {
  std::vector<BigInt> entries;
  entries.reserve(dhat.n());
  for (const BigInt &d : dhat.entries()) entries.push_back(dhat.d0() * d);
  DhatVector scaled(std::move(entries));
  if (dhat.n() >= 2) {
    std::vector<BigInt> before = padded_factors(critical_star(dhat).group, dhat.n());
    std::vector<BigInt> after = padded_factors(critical_star(scaled).group, scaled.n());
    for (std::size_t i = 0; i < before.size(); ++i)
      if (!divides(before[i], after[i]))
        throw std::logic_error("scaling did not refine the invariant factors");
  }
  return scaled;
}

DhatVector double_structure(const DhatVector &dhat) {
  const BigInt mult = dhat.d0() + 1;
  std::vector<BigInt> entries{mult};
  for (const BigInt &d : dhat.entries()) entries.push_back(d * mult);
  DhatVector doubled(std::move(entries));
  if (dhat.n() >= 2) {
    std::vector<BigInt> orders{mult};
    for (const BigInt &alpha : padded_factors(critical_star(dhat).group, dhat.n()))
      orders.push_back(alpha * mult);
    if (FiniteAbelianGroup::from_cyclic_orders(orders) != critical_star(doubled).group)
      throw std::logic_error("doubling group law violated");
  }
  return doubled;
}

ExtremalCandidates extremal_candidates(std::size_t n) {
  if (n < 4) throw std::invalid_argument("extremal_candidates: n >= 4 required");

  std::vector<BigInt> a(n + 1);
  a[1] = 1;
  for (std::size_t k = 2; k <= n; ++k) a[k] = a[k - 1] * a[k - 1] + a[k - 1];

  std::vector<BigInt> centries;
  for (std::size_t i = 1; i <= n - 2; ++i) centries.push_back(a[i] + 1);
  for (int j = 0; j < 2; ++j) centries.push_back(2 * a[n - 1]);
  DhatVector cyclic_form(std::move(centries));
  FiniteAbelianGroup expect = FiniteAbelianGroup::from_cyclic_orders({a[n - 1]});
  if (critical_star(cyclic_form).group != expect)
    throw std::logic_error("extremal cyclic candidate is not Z/a_{n-1}");

  ExtremalCandidates out{std::nullopt, BigInt(0), std::move(cyclic_form), a[n - 1]};
  if (n >= 5) {
    std::vector<BigInt> entries;
    for (std::size_t i = 1; i <= n - 3; ++i) entries.push_back(a[i] + 1);
    for (int j = 0; j < 3; ++j) entries.push_back(3 * a[n - 2]);
    DhatVector order_form(std::move(entries));
    out.order_value = 3 * a[n - 2] * a[n - 2];
    if (critical_star(order_form).order != out.order_value)
      throw std::logic_error("extremal order candidate has unexpected order");
    out.order_maximizer = std::move(order_form);
  }
  return out;
}

}  // namespace starcrit
