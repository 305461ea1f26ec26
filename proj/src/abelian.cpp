#include "starcrit/abelian.hpp"

#include <algorithm>
#include <stdexcept>

#include "starcrit/factor.hpp"

namespace starcrit {

std::vector<BigInt> coprime_basis(const std::vector<BigInt> &values) {
  std::vector<BigInt> basis;
  std::vector<BigInt> pending;
  for (const BigInt &v : values) {
    if (v < 1) throw std::invalid_argument("coprime_basis: values must be positive");
    if (v > 1) pending.push_back(v);
  }
  while (!pending.empty()) {
    BigInt y = pending.back();
    pending.pop_back();
    if (y == 1) continue;
    bool coprime = true;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      BigInt g = big_gcd(y, basis[i]);
      if (g == 1) continue;
      BigInt b = basis[i];
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      pending.push_back(g);
      pending.push_back(divexact(b, g));
      pending.push_back(divexact(y, g));
      coprime = false;
      break;
    }
    if (coprime) basis.push_back(y);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

namespace {

// exponent vectors over a shared coprime basis, one row per order
struct ExponentTable {
  std::vector<BigInt> basis;
  // exps[b][i] = multiplicity of basis[b] in orders[i]
  std::vector<std::vector<unsigned>> exps;
};

ExponentTable exponents_over_basis(const std::vector<BigInt> &orders,
                                   const std::vector<BigInt> &extra) {
  std::vector<BigInt> all = orders;
  all.insert(all.end(), extra.begin(), extra.end());
  ExponentTable t;
  t.basis = coprime_basis(all);
  t.exps.assign(t.basis.size(), std::vector<unsigned>(orders.size(), 0));
  for (std::size_t i = 0; i < orders.size(); ++i) {
    BigInt rest = orders[i];
    for (std::size_t b = 0; b < t.basis.size(); ++b) {
      unsigned e = 0;
      while (divides(t.basis[b], rest)) {
        rest = divexact(rest, t.basis[b]);
        ++e;
      }
      t.exps[b][i] = e;
    }
    if (rest != 1)
      throw std::logic_error("coprime basis failed to split " + orders[i].get_str());
  }
  return t;
}

// Rebuild invariant factors from per-basis exponent multisets. Each list is
// sorted descending and the k-th factor (largest first) multiplies the k-th
// exponent of every basis element.
std::vector<BigInt> factors_from_exponents(const std::vector<BigInt> &basis,
                                           std::vector<std::vector<unsigned>> exp_lists) {
  std::size_t count = 0;
  for (auto &list : exp_lists) {
    std::sort(list.begin(), list.end(), std::greater<unsigned>());
    while (!list.empty() && list.back() == 0) list.pop_back();
    count = std::max(count, list.size());
  }
  std::vector<BigInt> factors(count, BigInt(1));
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t k = 0; k < exp_lists[b].size(); ++k)
      factors[k] *= big_pow(basis[b], exp_lists[b][k]);
  std::reverse(factors.begin(), factors.end());
  return factors;
}

}  // namespace

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(const std::vector<BigInt> &orders) {
  for (const BigInt &o : orders)
    if (o < 1) throw std::invalid_argument("from_cyclic_orders: orders must be positive");
  ExponentTable t = exponents_over_basis(orders, {});
  FiniteAbelianGroup g;
  g.factors_ = factors_from_exponents(t.basis, t.exps);
  return g;
}

BigInt FiniteAbelianGroup::order() const {
  BigInt o = 1;
  for (const BigInt &f : factors_) o *= f;
  return o;
}

std::string FiniteAbelianGroup::str() const {
  if (factors_.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + factors_[i].get_str();
  }
  return s;
}

std::vector<std::string> FiniteAbelianGroup::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(factors_.size());
  for (const BigInt &f : factors_) out.push_back(f.get_str());
  return out;
}

bool operator<(const FiniteAbelianGroup &a, const FiniteAbelianGroup &b) {
  return std::lexicographical_compare(a.factors_.begin(), a.factors_.end(),
                                      b.factors_.begin(), b.factors_.end());
}

FiniteAbelianGroup direct_sum(const FiniteAbelianGroup &g, const FiniteAbelianGroup &h) {
  std::vector<BigInt> orders = g.invariant_factors();
  const auto &hf = h.invariant_factors();
  orders.insert(orders.end(), hf.begin(), hf.end());
  return FiniteAbelianGroup::from_cyclic_orders(orders);
}

FiniteAbelianGroup cancel_square(const std::vector<BigInt> &orders, const BigInt &r0) {
  if (r0 < 1) throw std::invalid_argument("cancel_square: r0 must be positive");
  for (const BigInt &o : orders)
    if (o < 1) throw std::invalid_argument("cancel_square: orders must be positive");

  ExponentTable t = exponents_over_basis(orders, {r0});
  std::vector<std::vector<unsigned>> kept(t.basis.size());
  for (std::size_t b = 0; b < t.basis.size(); ++b) {
    unsigned e0 = 0;
    {
      BigInt rest = r0;
      while (divides(t.basis[b], rest)) {
        rest = divexact(rest, t.basis[b]);
        ++e0;
      }
    }
    std::vector<unsigned> exps = t.exps[b];
    std::sort(exps.begin(), exps.end(), std::greater<unsigned>());
    const unsigned max_e = exps.empty() ? 0 : exps[0];
    if (max_e != e0)
      throw std::invalid_argument(
          "not a valid star structure spectrum: lcm exponent mismatch at basis " +
          t.basis[b].get_str());
    if (e0 > 0) {
      if (exps.size() < 2 || exps[1] != e0)
        throw std::invalid_argument(
            "not a valid star structure spectrum: maximal exponent of basis " +
            t.basis[b].get_str() + " occurs only once");
      exps.erase(exps.begin(), exps.begin() + 2);
    }
    kept[b] = std::move(exps);
  }
  return FiniteAbelianGroup::from_cyclic_orders(factors_from_exponents(t.basis, kept));
}

PrimaryDecomposition to_primary(const FiniteAbelianGroup &g, const std::vector<BigInt> &factor_hints) {
  PrimaryDecomposition pd;
  for (const BigInt &f : g.invariant_factors()) {
    for (const auto &[p, e] : factorize(f, factor_hints)) pd.components[p].push_back(e);
  }
  // per prime the exponents arrive nondecreasing because the invariant
  // factors form a divisibility chain
  return pd;
}

FiniteAbelianGroup from_primary(const PrimaryDecomposition &pd) {
  std::vector<BigInt> orders;
  for (const auto &[p, exps] : pd.components)
    for (unsigned e : exps) orders.push_back(big_pow(p, e));
  return FiniteAbelianGroup::from_cyclic_orders(orders);
}

}  // namespace starcrit
