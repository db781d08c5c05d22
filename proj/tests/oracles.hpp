#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's elimination or composition code: matrices are plain nested
// vectors of mpq_class (or integers mod p) and everything is schoolbook.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "bialg/linalg.hpp"

namespace oracle {

using Dense = std::vector<std::vector<mpq_class>>;

inline Dense dense_of(const bialg::Matrix& m) {
  Dense d(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.entry(r, c).to_mpq();
  return d;
}

inline mpq_class reduce(const mpq_class& q, std::uint64_t p) {
  if (p == 0) return q;
  mpz_class pp(static_cast<unsigned long>(p));
  mpz_class n = q.get_num() % pp;
  if (n < 0) n += pp;
  mpz_class d = q.get_den() % pp;
  mpz_class dinv;
  mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pp.get_mpz_t());
  mpz_class r = (n * dinv) % pp;
  return mpq_class(r);
}

inline Dense schoolbook(const Dense& a, const Dense& b, std::uint64_t p) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Dense c(n, std::vector<mpq_class>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      mpq_class s = 0;
      for (std::size_t t = 0; t < k; ++t) s += a[i][t] * b[t][j];
      c[i][j] = reduce(s, p);
    }
  return c;
}

/// Rank by fraction-free elimination on a copy (Q), or mod p.
inline std::size_t rank(Dense a, std::uint64_t p) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && reduce(a[piv][c], p) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (reduce(a[i][c], p) == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = reduce(a[i][j] - f * a[r][j], p);
    }
    ++r;
  }
  return r;
}

inline bialg::Matrix random_matrix(bialg::Field f, std::size_t rows, std::size_t cols,
                                   std::mt19937_64& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<bialg::Rational> e;
  for (std::size_t i = 0; i < rows * cols; ++i) e.emplace_back(d(rng));
  return bialg::Matrix(f, rows, cols, std::move(e));
}

}  // namespace oracle
