#include "starcrit/int_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace starcrit {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto &row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<BigInt> &d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::select(const std::vector<std::size_t> &rows,
                            const std::vector<std::size_t> &cols) const {
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
  return m;
}

SnfResult snf(const IntMatrix &input) {
  if (input.empty()) throw std::invalid_argument("snf: empty matrix");
  IntMatrix m = input;
  const std::size_t nr = m.rows(), nc = m.cols();
  const std::size_t dim = std::min(nr, nc);
  std::size_t t = 0;

  for (; t < dim; ++t) {
    // pivot: nonzero entry of minimum |value| in the remaining block
    std::size_t pr = t, pc = t;
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j) {
        if (m(i, j) == 0) continue;
        BigInt a = big_abs(m(i, j));
        if (!found || a < best) {
          best = a;
          pr = i;
          pc = j;
          found = true;
        }
      }
    if (!found) break;

    for (std::size_t j = 0; j < nc; ++j) std::swap(m(t, j), m(pr, j));
    for (std::size_t i = 0; i < nr; ++i) std::swap(m(i, t), m(i, pc));

    // reduce row and column against the pivot until both are clear
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (m(i, t) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t j = t; j < nc; ++j) m(i, j) -= q * m(t, j);
        if (m(i, t) != 0) {
          // remainder smaller than pivot: promote it
          for (std::size_t j = t; j < nc; ++j) std::swap(m(t, j), m(i, j));
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (m(t, j) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t i = t; i < nr; ++i) m(i, j) -= q * m(i, t);
        if (m(t, j) != 0) {
          for (std::size_t i = t; i < nr; ++i) std::swap(m(i, t), m(i, j));
          clean = false;
        }
      }
    }
    if (m(t, t) < 0) m(t, t) = -m(t, t);
  }

  std::vector<BigInt> diag(dim, BigInt(0));
  for (std::size_t i = 0; i < t; ++i) diag[i] = m(i, i);

  // divisibility fix-up: diag(a, b) ~ diag(gcd, lcm) under unimodular ops
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = i + 1; j < t; ++j) {
        if (divides(diag[i], diag[j])) continue;
        BigInt g = big_gcd(diag[i], diag[j]);
        diag[j] = divexact(diag[i] * diag[j], g);
        diag[i] = g;
        changed = true;
      }
  }
  std::sort(diag.begin(), diag.begin() + static_cast<std::ptrdiff_t>(t));
  return SnfResult{std::move(diag), t};
}

BigInt det(const IntMatrix &input) {
  if (!input.square()) throw std::invalid_argument("det: matrix not square");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && m(s, k) == 0) ++s;
      if (s == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(s, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = divexact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

namespace {

bool next_combination(std::vector<std::size_t> &idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

BigInt minors_gcd(const IntMatrix &m, std::size_t k) {
  if (k > std::min(m.rows(), m.cols())) throw std::invalid_argument("minors_gcd: k out of range");
  if (k == 0) return 1;
  std::vector<std::size_t> rsel(k), csel(k);
  BigInt g = 0;
  for (std::size_t i = 0; i < k; ++i) rsel[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) csel[i] = i;
    do {
      g = big_gcd(g, det(m.select(rsel, csel)));
      if (g == 1) return g;
    } while (next_combination(csel, m.cols()));
  } while (next_combination(rsel, m.rows()));
  return g;
}

}  // namespace starcrit
