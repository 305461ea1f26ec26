#include "starcrit/structures.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace starcrit {

std::string to_string(GraphKind kind) {
  return kind == GraphKind::star ? "star" : "complete";
}

DhatVector::DhatVector(std::vector<BigInt> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("d-hat must be nonempty");
  for (const BigInt &d : entries_)
    if (d < 1) throw std::invalid_argument("d-hat entries must be positive");
  std::sort(entries_.begin(), entries_.end());
  r0_ = 1;
  for (const BigInt &d : entries_) r0_ = big_lcm(r0_, d);
  BigInt s = 0;
  for (const BigInt &d : entries_) s += divexact(r0_, d);
  if (!divides(r0_, s)) {
    Rational sum;
    for (const BigInt &d : entries_) sum += unit_fraction(d);
    throw std::invalid_argument("not an arithmetical structure: sum = " + sum.str());
  }
  d0_ = divexact(s, r0_);
}

std::vector<BigInt> DhatVector::leaf_r() const {
  std::vector<BigInt> r;
  r.reserve(entries_.size());
  for (const BigInt &d : entries_) r.push_back(divexact(r0_, d));
  return r;
}

ArithmeticalStructure dhat_to_structure(const DhatVector &dhat) {
  ArithmeticalStructure s;
  s.shape = {GraphKind::star, dhat.n()};
  s.d = dhat.entries();
  s.d.push_back(dhat.d0());
  s.r = dhat.leaf_r();
  s.r.push_back(dhat.r0());
  return s;
}

DhatVector structure_to_dhat(const ArithmeticalStructure &s) {
  if (s.shape.kind != GraphKind::star)
    throw std::invalid_argument("structure_to_dhat: star structure required");
  std::vector<BigInt> leaves(s.d.begin(), s.d.end() - 1);
  return DhatVector(std::move(leaves));
}

ValidationReport validate(const ArithmeticalStructure &s) {
  const std::size_t count = s.d.size();
  if (s.r.size() != count || count == 0)
    return {false, "d and r must be nonempty and of equal length"};
  const std::size_t expected =
      s.shape.kind == GraphKind::star ? s.shape.n + 1 : s.shape.n;
  if (count != expected) return {false, "vertex count does not match shape"};
  for (std::size_t v = 0; v < count; ++v)
    if (s.d[v] < 1 || s.r[v] < 1)
      return {false, "labels must be positive at vertex " + std::to_string(v)};

  for (std::size_t v = 0; v < count; ++v) {
    BigInt lhs = s.r[v] * s.d[v];
    BigInt rhs = 0;
    if (s.shape.kind == GraphKind::star) {
      if (v + 1 == count)  // center: adjacent to every leaf
        for (std::size_t u = 0; u + 1 < count; ++u) rhs += s.r[u];
      else
        rhs = s.r[count - 1];
    } else {
      for (std::size_t u = 0; u < count; ++u)
        if (u != v) rhs += s.r[u];
    }
    if (lhs != rhs)
      return {false, "vertex " + std::to_string(v) + ": r*d = " + lhs.get_str() +
                         " but neighbor sum = " + rhs.get_str()};
  }
  BigInt g = 0;
  for (const BigInt &rv : s.r) g = big_gcd(g, rv);
  if (g != 1) return {false, "gcd(r) = " + g.get_str() + ", expected 1"};
  return {true, ""};
}

IntMatrix laplacian(const ArithmeticalStructure &s) {
  const std::size_t count = s.d.size();
  IntMatrix m(count, count);
  for (std::size_t v = 0; v < count; ++v) m(v, v) = s.d[v];
  if (s.shape.kind == GraphKind::star) {
    for (std::size_t u = 0; u + 1 < count; ++u) {
      m(u, count - 1) = -1;
      m(count - 1, u) = -1;
    }
  } else {
    for (std::size_t u = 0; u < count; ++u)
      for (std::size_t v = 0; v < count; ++v)
        if (u != v) m(u, v) = -1;
  }
  return m;
}

ArithmeticalStructure clique_star(const ArithmeticalStructure &s) {
  if (s.shape.kind != GraphKind::complete)
    throw std::invalid_argument("clique_star: complete-graph structure required");
  const std::size_t n = s.shape.n;
  std::vector<std::pair<BigInt, BigInt>> leaves(n);
  BigInt rsum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    leaves[i] = {s.d[i] + 1, s.r[i]};
    rsum += s.r[i];
  }
  std::sort(leaves.begin(), leaves.end());
  ArithmeticalStructure out;
  out.shape = {GraphKind::star, n};
  for (auto &[dv, rv] : leaves) {
    out.d.push_back(dv);
    out.r.push_back(rv);
  }
  out.d.push_back(1);
  out.r.push_back(rsum);
  return out;
}

ArithmeticalStructure star_clique(const ArithmeticalStructure &s) {
  if (s.shape.kind != GraphKind::star)
    throw std::invalid_argument("star_clique: star structure required");
  const std::size_t n = s.shape.n;
  if (s.d.at(n) != 1)
    throw std::invalid_argument("star_clique: center d-value must be 1, got " +
                                s.d.at(n).get_str());
  std::vector<std::pair<BigInt, BigInt>> verts(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (s.d[i] == 1)
      throw std::invalid_argument("star_clique: no complete-graph preimage, leaf d-value 1");
    verts[i] = {s.d[i] - 1, s.r[i]};
  }
  std::sort(verts.begin(), verts.end());
  ArithmeticalStructure out;
  out.shape = {GraphKind::complete, n};
  for (auto &[dv, rv] : verts) {
    out.d.push_back(dv);
    out.r.push_back(rv);
  }
  return out;
}

}  // namespace starcrit
