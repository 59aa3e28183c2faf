#ifndef GRSTD_LINALG_HPP
#define GRSTD_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "grstd/error.hpp"
#include "grstd/integer.hpp"

namespace grstd {

/// Dense matrix over Z/p^n stored by rows.
using Matrix = std::vector<std::vector<Int>>;

/// Inverse of a square matrix over Z/N, N = p^e, by Gauss-Jordan
/// elimination with unit pivots. Throws ArithmeticError when the reduction
/// mod p is singular.
inline Matrix inverse_matrix(Matrix a, const Int& N, const Int& p) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && mod(a[piv][c], p) == 0) ++piv;
    if (piv == n) throw ArithmeticError("matrix is singular modulo " + p.get_str());
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const Int u = inv_mod(a[c][c], N);
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] = mod(a[c][j] * u, N);
      inv[c][j] = mod(inv[c][j] * u, N);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Int f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = mod(a[i][j] - f * a[c][j], N);
        inv[i][j] = mod(inv[i][j] - f * inv[c][j], N);
      }
    }
  }
  return inv;
}

/// Rank of a matrix over F_p.
inline std::size_t rank_mod_p(Matrix a, const Int& p) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && mod(a[piv][c], p) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const Int u = inv_mod(a[rank][c], p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Int f = mod(a[i][c] * u, p);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = mod(a[i][j] - f * a[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

/// Coordinates with respect to vectors v_0, ..., v_{m-1} in (Z/N)^d whose
/// reductions mod p are linearly independent. Such vectors span a free
/// direct summand; the solver selects m rows on which they form an
/// invertible block.
class SpanSolver {
 public:
  SpanSolver(const std::vector<std::vector<Int>>& vectors, const Int& N, const Int& p) : N_(N), vectors_(vectors) {
    const std::size_t m = vectors.size();
    if (m == 0) throw InvalidArgument("SpanSolver: no vectors");
    d_ = vectors[0].size();
    // Work on the d x m matrix whose columns are the vectors.
    Matrix a(d_, std::vector<Int>(m));
    for (std::size_t j = 0; j < m; ++j) {
      if (vectors[j].size() != d_) throw InvalidArgument("SpanSolver: vectors of unequal length");
      for (std::size_t i = 0; i < d_; ++i) a[i][j] = mod(vectors[j][i], N);
    }
    std::vector<bool> used(d_, false);
    for (std::size_t c = 0; c < m; ++c) {
      std::size_t piv = 0;
      while (piv < d_ && (used[piv] || mod(a[piv][c], p) == 0)) ++piv;
      if (piv == d_) throw ArithmeticError("SpanSolver: vectors are dependent modulo " + p.get_str());
      used[piv] = true;
      rows_.push_back(piv);
      const Int u = inv_mod(a[piv][c], N);
      for (std::size_t i = 0; i < d_; ++i) {
        if (used[i] || a[i][c] == 0) continue;
        const Int f = mod(a[i][c] * u, N);
        for (std::size_t j = c; j < m; ++j) a[i][j] = mod(a[i][j] - f * a[piv][j], N);
      }
    }
    Matrix block(m, std::vector<Int>(m));
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t j = 0; j < m; ++j) block[r][j] = mod(vectors[j][rows_[r]], N);
    }
    inv_ = inverse_matrix(std::move(block), N, p);
  }

  std::size_t size() const { return vectors_.size(); }

  /// The unique c with sum_j c_j v_j = v, or nothing when v is outside the span.
  std::optional<std::vector<Int>> coordinates(const std::vector<Int>& v) const {
    const std::size_t m = vectors_.size();
    if (v.size() != d_) throw InvalidArgument("SpanSolver: vector of wrong length");
    std::vector<Int> c(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t r = 0; r < m; ++r) mpz_addmul(c[i].get_mpz_t(), inv_[i][r].get_mpz_t(), v[rows_[r]].get_mpz_t());
      c[i] = mod(c[i], N_);
    }
    for (std::size_t i = 0; i < d_; ++i) {
      Int s;
      for (std::size_t j = 0; j < m; ++j) mpz_addmul(s.get_mpz_t(), c[j].get_mpz_t(), vectors_[j][i].get_mpz_t());
      if (mod(s - v[i], N_) != 0) return std::nullopt;
    }
    return c;
  }

 private:
  Int N_;
  std::size_t d_ = 0;
  std::vector<std::vector<Int>> vectors_;
  std::vector<std::size_t> rows_;
  Matrix inv_;
};

}  // namespace grstd

#endif  // GRSTD_LINALG_HPP
