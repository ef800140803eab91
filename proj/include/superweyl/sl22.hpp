#pragma once

#include <array>
#include <string>
#include <vector>

#include "superweyl/superlie.hpp"

namespace superweyl {

/// 4x4 matrix over Scalar with rows/columns 0,1 even and 2,3 odd.
using Mat4 = std::array<std::array<Scalar, 4>, 4>;

inline Mat4 elementary(int row, int col, const Scalar& c = Scalar(1)) {
  Mat4 m{};
  m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = c;
  return m;
}

inline Mat4 diagonal(const std::array<Scalar, 4>& d) {
  Mat4 m{};
  for (std::size_t k = 0; k < 4; ++k) m[k][k] = d[k];
  return m;
}

namespace sl22_detail {

inline Mat4 mul(const Mat4& a, const Mat4& b) {
  Mat4 out{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t l = 0; l < 4; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < 4; ++j) {
        if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
      }
    }
  }
  return out;
}

inline Mat4 supercommutator(const Mat4& a, int pa, const Mat4& b, int pb) {
  Mat4 ab = mul(a, b);
  Mat4 ba = mul(b, a);
  const bool plus = pa == 1 && pb == 1;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) ab[i][j] = plus ? ab[i][j] + ba[i][j] : ab[i][j] - ba[i][j];
  }
  return ab;
}

}  // namespace sl22_detail

/// Basis of sl(2|2): E1~ = e12, F1~ = e21, H1~ = diag(1,-1,0,0), E2~ = e43,
/// F2~ = e34, H2~ = diag(0,0,1,-1), Id, then B_ij = e_{i,2+j} and C_ij = e_{2+i,j}.
struct Sl22Element {
  std::string name;
  int parity;
  Mat4 matrix;
};

inline const std::vector<Sl22Element>& sl22_basis_matrices() {
  static const std::vector<Sl22Element> basis = [] {
    std::vector<Sl22Element> b;
    b.push_back({"E1", 0, elementary(0, 1)});
    b.push_back({"H1", 0, diagonal({Scalar(1), Scalar(-1), Scalar(0), Scalar(0)})});
    b.push_back({"F1", 0, elementary(1, 0)});
    b.push_back({"E2", 0, elementary(3, 2)});
    b.push_back({"H2", 0, diagonal({Scalar(0), Scalar(0), Scalar(1), Scalar(-1)})});
    b.push_back({"F2", 0, elementary(2, 3)});
    b.push_back({"Id", 0, diagonal({Scalar(1), Scalar(1), Scalar(1), Scalar(1)})});
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) b.push_back({"B" + std::to_string(i + 1) + std::to_string(j + 1), 1, elementary(i, 2 + j)});
    }
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) b.push_back({"C" + std::to_string(i + 1) + std::to_string(j + 1), 1, elementary(2 + i, j)});
    }
    return b;
  }();
  return basis;
}

/// Coordinates of a trace-balanced (2|2) matrix in the sl(2|2) basis.
inline LieVector sl22_coordinates(const Mat4& m) {
  if (m[0][0] + m[1][1] != m[2][2] + m[3][3]) throw AlgebraError("matrix is not trace balanced");
  LieVector v;
  const Scalar half = Scalar::rational(1, 2);
  v.add(0, m[0][1]);
  v.add(2, m[1][0]);
  v.add(3, m[3][2]);
  v.add(5, m[2][3]);
  v.add(1, (m[0][0] - m[1][1]) * half);
  v.add(4, (m[2][2] - m[3][3]) * half);
  v.add(6, (m[0][0] + m[1][1]) * half);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      v.add(7 + 2 * i + j, m[static_cast<std::size_t>(i)][static_cast<std::size_t>(2 + j)]);
      v.add(11 + 2 * i + j, m[static_cast<std::size_t>(2 + i)][static_cast<std::size_t>(j)]);
    }
  }
  return v;
}

inline Mat4 sl22_matrix(const LieVector& v) {
  Mat4 out{};
  const auto& basis = sl22_basis_matrices();
  for (const auto& [k, c] : v.terms()) {
    const Mat4& m = basis[static_cast<std::size_t>(k)].matrix;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        if (!m[i][j].is_zero()) out[i][j] += c * m[i][j];
      }
    }
  }
  return out;
}

/// sl(2|2), dimension (7|8), with the supercommutator of matrices.
inline SuperLieAlgebra build_sl22() {
  const auto& mats = sl22_basis_matrices();
  std::vector<BasisElement> basis;
  for (const auto& m : mats) basis.push_back({m.name, m.parity});
  SuperLieAlgebra L(basis);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    for (std::size_t j = i; j < mats.size(); ++j) {
      Mat4 c = sl22_detail::supercommutator(mats[i].matrix, mats[i].parity, mats[j].matrix, mats[j].parity);
      L.set_bracket(static_cast<int>(i), static_cast<int>(j), sl22_coordinates(c));
    }
  }
  return L;
}

/// psl(2|2) = sl(2|2) / <Id>, dimension (6|8).
inline SuperLieAlgebra build_psl22() {
  SuperLieAlgebra sl = build_sl22();
  return quotient(sl, {sl.index_of("Id")});
}

/// The 2-cocycle f on psl(2|2) with values in Span(c+, c, c-).
inline Cochain2 psl22_cocycle(const SuperLieAlgebra& psl) {
  Cochain2 f(psl, {"c+", "c", "c-"});
  f.set("B12", "C21", "c");
  f.set("C12", "B21", "c");
  f.set("C22", "B22", "c");
  f.set("B11", "C11", "c");
  f.set("C22", "C11", "c+");
  f.set("C12", "C21", "c+", Scalar(-1));
  f.set("B12", "B21", "c-");
  f.set("B11", "B22", "c-", Scalar(-1));
  return f;
}

/// Central extension of psl(2|2) by f, dimension (9|8).
inline SuperLieAlgebra build_psl22_hat() {
  SuperLieAlgebra psl = build_psl22();
  return central_extension(psl, psl22_cocycle(psl));
}

/// Supertrace of a matrix over commutative scalars.
inline Scalar supertrace(const Mat4& m) { return m[0][0] + m[1][1] - m[2][2] - m[3][3]; }

}  // namespace superweyl
