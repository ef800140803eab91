#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "superweyl/errors.hpp"
#include "superweyl/scalar.hpp"

namespace superweyl {

using ScalarVector = std::vector<Scalar>;
using ScalarMatrix = std::vector<ScalarVector>;  // row-major

inline ScalarMatrix identity_matrix(std::size_t n) {
  ScalarMatrix m(n, ScalarVector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

/// Row echelon form over the fraction field. Pivots are nonzero as rational
/// functions, so the rank is the generic rank when parameters are formal.
struct Echelon {
  ScalarMatrix rows;
  std::vector<std::size_t> pivots;  // pivot column of each row
};

inline Echelon row_reduce(ScalarMatrix m) {
  Echelon out;
  if (m.empty()) return out;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Scalar inv = m[r][c].inverse();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

inline std::size_t rank(const ScalarMatrix& m) { return row_reduce(m).pivots.size(); }

/// Inverse of a square matrix; throws DivisionByZero when singular.
inline ScalarMatrix inverse(const ScalarMatrix& m) {
  const std::size_t n = m.size();
  ScalarMatrix aug(n, ScalarVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = Scalar(1);
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.pivots.size() != n || (n > 0 && e.pivots.back() != n - 1)) throw DivisionByZero("singular matrix");
  ScalarMatrix inv(n, ScalarVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
  }
  return inv;
}

/// Coordinates x with sum_i x_i * vectors[i] = target, if target lies in the span.
inline std::optional<ScalarVector> solve_in_span(const std::vector<ScalarVector>& vectors, const ScalarVector& target) {
  const std::size_t k = vectors.size();
  const std::size_t n = target.size();
  ScalarMatrix aug(n, ScalarVector(k + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug[r][c] = vectors[c][r];
    aug[r][k] = target[r];
  }
  Echelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
  ScalarVector x(k);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rows[i][k];
  return x;
}

/// Basis of {x : m x = 0}.
inline std::vector<ScalarVector> nullspace(const ScalarMatrix& m, std::size_t cols) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<ScalarVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ScalarVector v(cols);
    v[free] = Scalar(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace superweyl
