#ifndef STARCRIT_INT_MATRIX_HPP
#define STARCRIT_INT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "starcrit/numeric.hpp"

namespace starcrit {

// Dense row-major integer matrix. Deliberately dumb: the structured
// matrices in scope are at most (n+3) x (n+3) for oracle-sized n.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, BigInt(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<BigInt> &d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool square() const { return rows_ == cols_; }

  BigInt &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  // Submatrix picked by row/column index sets (ascending).
  IntMatrix select(const std::vector<std::size_t> &rows,
                   const std::vector<std::size_t> &cols) const;

  bool operator==(const IntMatrix &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<BigInt> entries_;
};

// Smith normal form diagonal: invariant factors a_1 | a_2 | ... | a_t
// followed by zeros, length min(rows, cols).
struct SnfResult {
  std::vector<BigInt> diagonal;
  std::size_t rank = 0;

  // The nontrivial invariant factors (entries > 1), in order.
  std::vector<BigInt> nontrivial() const {
    std::vector<BigInt> out;
    for (const BigInt &a : diagonal)
      if (a > 1) out.push_back(a);
    return out;
  }
};

// Invariant factors by elimination on min-|pivot| entries; transform
// matrices are not tracked.
SnfResult snf(const IntMatrix &m);

// Exact determinant, fraction-free (Bareiss).
BigInt det(const IntMatrix &m);

// gcd of all k x k minors, D_0 = 1, 0 if all minors vanish. Exhaustive over
// row/column subsets; test-oracle scale only.
BigInt minors_gcd(const IntMatrix &m, std::size_t k);

}  // namespace starcrit

#endif
