#ifndef STARCRIT_STRUCTURES_HPP
#define STARCRIT_STRUCTURES_HPP

#include <string>
#include <vector>

#include "starcrit/int_matrix.hpp"
#include "starcrit/numeric.hpp"
#include "starcrit/rational.hpp"

namespace starcrit {

enum class GraphKind { star, complete };

// star: n leaves around one center; complete: n vertices.
struct GraphShape {
  GraphKind kind;
  std::size_t n;
};

std::string to_string(GraphKind kind);

// Leaf d-labels (d_1, ..., d_n) of a star structure, stored sorted
// nondecreasing. The reciprocals must sum to a positive integer d0; the
// center r-value r0 is the lcm of the entries. Construction validates.
class DhatVector {
 public:
  explicit DhatVector(std::vector<BigInt> entries);

  const std::vector<BigInt> &entries() const { return entries_; }
  std::size_t n() const { return entries_.size(); }
  const BigInt &d0() const { return d0_; }
  const BigInt &r0() const { return r0_; }

  // r_i = r0 / d_i, leaves in entry order.
  std::vector<BigInt> leaf_r() const;

  bool operator==(const DhatVector &o) const { return entries_ == o.entries_; }
  bool operator<(const DhatVector &o) const {
    return std::lexicographical_compare(entries_.begin(), entries_.end(),
                                        o.entries_.begin(), o.entries_.end());
  }

 private:
  std::vector<BigInt> entries_;
  BigInt d0_, r0_;
};

// Full (d, r) labeling. Star vertex order: leaves first (sorted by d
// nondecreasing), center last, matching the B(d) block layout used in the
// minor checks. Complete graphs carry n vertices sorted by d.
struct ArithmeticalStructure {
  GraphShape shape;
  std::vector<BigInt> d;
  std::vector<BigInt> r;
};

struct ValidationReport {
  bool ok = true;
  std::string message;
};

ArithmeticalStructure dhat_to_structure(const DhatVector &dhat);

// Leaf d-values of a star structure as a DhatVector.
DhatVector structure_to_dhat(const ArithmeticalStructure &s);

// Checks r_v d_v = sum of adjacent r_u at every vertex and gcd(r) = 1.
// Violations are reported, never thrown.
ValidationReport validate(const ArithmeticalStructure &s);

// diag(d) - A(G); (n+1)x(n+1) with the center last for stars, n x n for
// complete graphs. For valid structures r spans the kernel.
IntMatrix laplacian(const ArithmeticalStructure &s);

// K_n -> S_n: d_i + 1 on the leaves, 1 at the center, r carried over with
// r0 = sum r_i. Preserves the critical group.
ArithmeticalStructure clique_star(const ArithmeticalStructure &s);

// Inverse of clique_star; requires a star with center d-value 1. Throws if
// some leaf has d-value 1 (no complete-graph preimage).
ArithmeticalStructure star_clique(const ArithmeticalStructure &s);

}  // namespace starcrit

#endif
