#pragma once

#include <array>
#include <string>
#include <vector>

#include "superweyl/errors.hpp"
#include "superweyl/linalg.hpp"
#include "superweyl/superlie.hpp"

namespace superweyl {

struct GammaParams {
  Scalar sigma1;
  Scalar sigma2;
  Scalar sigma3;

  static GammaParams formal() {
    return {Scalar::param(Param::sigma1), Scalar::param(Param::sigma2), Scalar::param(Param::sigma3)};
  }
  /// (2, -1 - alpha, alpha - 1) for a given alpha.
  static GammaParams for_alpha(const Scalar& alpha) { return {Scalar(2), Scalar(-1) - alpha, alpha - Scalar(1)}; }

  const Scalar& operator[](int slot) const { return slot == 0 ? sigma1 : slot == 1 ? sigma2 : sigma3; }
  bool is_simple() const { return !sigma1.is_zero() && !sigma2.is_zero() && !sigma3.is_zero(); }
};

namespace gamma_detail {

using Mat2 = std::array<std::array<Scalar, 2>, 2>;

// Phi(v_x, v_y) as an operator on V = span(v0, v1), with psi(v0, v1) = 1.
// k = 0: (v0, v0); k = 1: (v0, v1); k = 2: (v1, v1).
inline Mat2 phi_matrix(int k) {
  Mat2 m{};
  if (k == 0) m[0][1] = Scalar(2);
  if (k == 1) {
    m[0][0] = Scalar(-1);
    m[1][1] = Scalar(1);
  }
  if (k == 2) m[1][0] = Scalar(-2);
  return m;
}

// Coordinates of a traceless [[p, q], [r, -p]] in (Phi00, Phi01, Phi11).
inline std::array<Scalar, 3> decompose(const Mat2& m) {
  return {m[0][1] * Scalar::rational(1, 2), -m[0][0], -(m[1][0] * Scalar::rational(1, 2))};
}

inline Mat2 commutator(const Mat2& a, const Mat2& b) {
  Mat2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int l = 0; l < 2; ++l) out[i][j] += a[i][l] * b[l][j] - b[i][l] * a[l][j];
    }
  }
  return out;
}

inline int psi(int x, int y) { return x == y ? 0 : (x == 0 ? 1 : -1); }
inline int phi_kind(int x, int y) { return x + y; }

inline int even_index(int slot, int k) { return 3 * slot + k; }
inline int odd_index(const std::array<int, 3>& v) { return 9 + 4 * v[0] + 2 * v[1] + v[2]; }
inline std::array<int, 3> odd_vectors(int index) {
  int r = index - 9;
  return {r / 4, (r / 2) % 2, r % 2};
}

constexpr std::array<char, 3> kLetters{'e', 'f', 'h'};

}  // namespace gamma_detail

/// Gamma(sigma1, sigma2, sigma3) in the tensor chart: Phi_i(x, y) for the
/// even part and x1 (x) x2 (x) x3 for the odd part. The bracket is built
/// for any sigma; it is a Lie superalgebra only when the sigmas sum to zero.
inline SuperLieAlgebra build_gamma_tensor(const GammaParams& p) {
  using namespace gamma_detail;
  std::vector<BasisElement> basis;
  const std::array<std::string, 3> pairs{"1,1", "1,2", "2,2"};
  for (int s = 0; s < 3; ++s) {
    for (int k = 0; k < 3; ++k) {
      std::string args = pairs[k];
      std::string a = std::string(1, kLetters[s]) + args.substr(0, 1);
      std::string b = std::string(1, kLetters[s]) + args.substr(2, 1);
      basis.push_back({"Phi" + std::to_string(s + 1) + "(" + a + "," + b + ")", 0});
    }
  }
  for (int idx = 9; idx < 17; ++idx) {
    auto v = odd_vectors(idx);
    std::string name;
    for (int s = 0; s < 3; ++s) name += std::string(1, kLetters[s]) + std::to_string(v[s] + 1);
    basis.push_back({name, 1});
  }
  SuperLieAlgebra L(basis);

  // even-even: commuting copies of sp(psi_s)
  for (int s = 0; s < 3; ++s) {
    for (int k = 0; k < 3; ++k) {
      for (int l = k + 1; l < 3; ++l) {
        auto c = decompose(commutator(phi_matrix(k), phi_matrix(l)));
        LieVector v;
        for (int m = 0; m < 3; ++m) v.add(even_index(s, m), c[m]);
        L.set_bracket(even_index(s, k), even_index(s, l), v);
      }
    }
  }
  // even-odd: the standard action on the matching tensor slot
  for (int s = 0; s < 3; ++s) {
    for (int k = 0; k < 3; ++k) {
      Mat2 m = phi_matrix(k);
      for (int idx = 9; idx < 17; ++idx) {
        auto v = odd_vectors(idx);
        LieVector out;
        for (int row = 0; row < 2; ++row) {
          if (m[row][v[s]].is_zero()) continue;
          auto w = v;
          w[s] = row;
          out.add(odd_index(w), m[row][v[s]]);
        }
        L.set_bracket(even_index(s, k), idx, out);
      }
    }
  }
  // odd-odd: sigma_1 psi_2 psi_3 Phi_1 + sigma_2 psi_1 psi_3 Phi_2 + sigma_3 psi_1 psi_2 Phi_3
  for (int x = 9; x < 17; ++x) {
    for (int y = x; y < 17; ++y) {
      auto a = odd_vectors(x);
      auto b = odd_vectors(y);
      LieVector out;
      for (int s = 0; s < 3; ++s) {
        int weight = 1;
        for (int t = 0; t < 3; ++t) {
          if (t != s) weight *= psi(a[t], b[t]);
        }
        if (weight != 0) out.add(even_index(s, phi_kind(a[s], b[s])), p[s] * Scalar(weight));
      }
      L.set_bracket(x, y, out);
    }
  }
  return L;
}

/// Names of the 17 generators in the working chart.
inline const std::vector<BasisElement>& gamma_named_basis() {
  static const std::vector<BasisElement> basis{
      {"E1", 0}, {"H1", 0}, {"F1", 0}, {"E2", 0}, {"H2", 0}, {"F2", 0}, {"E3", 0}, {"H3", 0}, {"F3", 0},
      {"T1", 1}, {"T2", 1}, {"T3", 1}, {"T4", 1}, {"D1", 1}, {"D2", 1}, {"D3", 1}, {"D4", 1}};
  return basis;
}

/// Rows of the named chart in tensor coordinates. Odd rows carry an implicit
/// factor r with r^2 = gamma_named_odd_square(): the tensor e1 (x) f1 (x) h1 is
/// sqrt(2) i T1, and likewise for the other odd generators.
inline ScalarMatrix gamma_named_rows() {
  using gamma_detail::even_index;
  using gamma_detail::odd_index;
  ScalarMatrix rows(17, ScalarVector(17));
  auto set = [&](int row, int col, const Scalar& c) { rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = c; };
  const Scalar half = Scalar::rational(1, 2);
  set(0, even_index(0, 0), Scalar(-1));  // E1 = -Phi1(e1,e1)
  set(1, even_index(0, 1), Scalar(-1));  // H1 = -Phi1(e1,e2)
  set(2, even_index(0, 2), Scalar(-1));  // F1 = -Phi1(e2,e2)
  set(3, even_index(1, 2), -half);       // E2 = -1/2 Phi2(f2,f2)
  set(4, even_index(1, 1), Scalar(1));   // H2 = Phi2(f1,f2)
  set(5, even_index(1, 0), -half);       // F2 = -1/2 Phi2(f1,f1)
  set(6, even_index(2, 2), half);        // E3 = 1/2 Phi3(h2,h2)
  set(7, even_index(2, 1), Scalar(1));   // H3 = Phi3(h1,h2)
  set(8, even_index(2, 0), -half);       // F3 = -1/2 Phi3(h1,h1)
  set(9, odd_index({0, 0, 0}), Scalar(1));    // T1 ~ e1f1h1
  set(10, odd_index({0, 0, 1}), Scalar(1));   // T2 ~ e1f1h2
  set(11, odd_index({0, 1, 1}), Scalar(1));   // T3 ~ e1f2h2
  set(12, odd_index({0, 1, 0}), Scalar(-1));  // T4 ~ -e1f2h1
  set(13, odd_index({1, 1, 1}), Scalar(1));   // D1 ~ e2f2h2
  set(14, odd_index({1, 1, 0}), Scalar(-1));  // D2 ~ -e2f2h1
  set(15, odd_index({1, 0, 0}), Scalar(1));   // D3 ~ e2f1h1
  set(16, odd_index({1, 0, 1}), Scalar(1));   // D4 ~ e2f1h2
  return rows;
}

/// r^2 for r = 1/(sqrt(2) i).
inline Scalar gamma_named_odd_square() { return Scalar::rational(-1, 2); }

/// Gamma(sigma1, sigma2, sigma3) in the named basis E^i, H^i, F^i, T^j, D^j.
inline SuperLieAlgebra build_gamma(const GammaParams& p) {
  return change_basis(build_gamma_tensor(p), gamma_named_basis(), gamma_named_rows(), gamma_named_odd_square());
}

/// Gamma(2, -1 - alpha, alpha - 1) with formal alpha.
inline SuperLieAlgebra build_gamma_alpha() { return build_gamma(GammaParams::for_alpha(Scalar::param(Param::alpha))); }

/// A basis map f(b_i) = r^{p_i} images[i] with r^2 = odd_square.
struct LieMap {
  std::vector<LieVector> images;
  Scalar odd_square = Scalar(1);
};

/// Isomorphism Gamma(sigma) -> Gamma(sigma') with sigma'_i = k sigma_{pi(i)},
/// in the tensor chart. `pi` is zero-based: target slot i receives source slot pi[i].
inline LieMap rescaling_isomorphism_tensor(const std::array<int, 3>& pi, const Scalar& k) {
  using namespace gamma_detail;
  if (k.is_zero()) throw ZeroScale("rescaling factor must be nonzero");
  std::array<int, 3> inv{};
  for (int i = 0; i < 3; ++i) inv[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])] = i;
  LieMap map;
  map.odd_square = k.inverse();
  map.images.resize(17);
  for (int s = 0; s < 3; ++s) {
    for (int kind = 0; kind < 3; ++kind) map.images[static_cast<std::size_t>(even_index(s, kind))] = LieVector::unit(even_index(inv[s], kind));
  }
  for (int idx = 9; idx < 17; ++idx) {
    auto x = odd_vectors(idx);
    std::array<int, 3> y{};
    for (int i = 0; i < 3; ++i) y[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])];
    map.images[static_cast<std::size_t>(idx)] = LieVector::unit(odd_index(y));
  }
  return map;
}

/// Transports a tensor-chart map into the named charts of source and target.
inline LieMap to_named_chart(const LieMap& tensor_map) {
  const ScalarMatrix rows = gamma_named_rows();
  const ScalarMatrix inv = inverse(rows);  // tensor coords -> named coords
  LieMap out;
  out.odd_square = tensor_map.odd_square;
  for (std::size_t k = 0; k < 17; ++k) {
    LieVector tensor_image;
    for (std::size_t j = 0; j < 17; ++j) {
      if (!rows[k][j].is_zero()) tensor_image.add_scaled(tensor_map.images[j], rows[k][j]);
    }
    LieVector named;
    for (const auto& [l, c] : tensor_image.terms()) {
      for (std::size_t m = 0; m < 17; ++m) {
        const Scalar& f = inv[static_cast<std::size_t>(l)][m];
        if (!f.is_zero()) named.add(static_cast<int>(m), c * f);
      }
    }
    out.images.push_back(std::move(named));
  }
  return out;
}

/// Rescaling isomorphism in the named charts.
inline LieMap rescaling_isomorphism(const GammaParams& p, const Scalar& k, const std::array<int, 3>& pi) {
  (void)p;  // the map does not depend on sigma; the target does
  return to_named_chart(rescaling_isomorphism_tensor(pi, k));
}

inline GammaParams rescaled_params(const GammaParams& p, const Scalar& k, const std::array<int, 3>& pi) {
  return {k * p[pi[0]], k * p[pi[1]], k * p[pi[2]]};
}

// ---------------------------------------------------------------------------
// Contractions of Gamma(2, -1 - alpha, alpha - 1) at alpha -> 1 and alpha -> -1.

enum class ContractionDirection { to_plus_one, to_minus_one };

/// Slot whose sl(2) copy is rescaled into C+, C, C-.
inline int contracted_slot(ContractionDirection d) { return d == ContractionDirection::to_plus_one ? 2 : 1; }

inline std::vector<BasisElement> contracted_basis(ContractionDirection d) {
  std::vector<BasisElement> basis = gamma_named_basis();
  const std::size_t base = static_cast<std::size_t>(3 * contracted_slot(d));
  basis[base] = {"C+", 0};
  basis[base + 1] = {"C", 0};
  basis[base + 2] = {"C-", 0};
  return basis;
}

/// Factor (alpha - 1) or (alpha + 1) on the rescaled slot, 1 elsewhere.
inline ScalarVector contraction_scales(ContractionDirection d, const Scalar& alpha) {
  ScalarVector scale(17, Scalar(1));
  const Scalar f = d == ContractionDirection::to_plus_one ? alpha - Scalar(1) : alpha + Scalar(1);
  const std::size_t base = static_cast<std::size_t>(3 * contracted_slot(d));
  for (std::size_t k = 0; k < 3; ++k) scale[base + k] = f;
  return scale;
}

/// C+ = (alpha -/+ 1) E, C = (alpha -/+ 1) H, C- = (alpha -/+ 1) F on the
/// rescaled slot, then alpha -> +/-1 in every structure constant.
inline SuperLieAlgebra contract_gamma(ContractionDirection d) {
  const Scalar alpha = Scalar::param(Param::alpha);
  SuperLieAlgebra G = build_gamma_alpha();
  ScalarVector scale = contraction_scales(d, alpha);
  ScalarMatrix rows(17, ScalarVector(17));
  for (std::size_t k = 0; k < 17; ++k) rows[k][k] = scale[k];
  SuperLieAlgebra rescaled = change_basis(G, contracted_basis(d), rows);
  return rescaled.limit(Param::alpha, GaussianRational(d == ContractionDirection::to_plus_one ? 1 : -1));
}

/// Isomorphism contract_gamma(to_minus_one) -> contract_gamma(to_plus_one),
/// induced by the slot swap 2 <-> 3 that sends alpha to -alpha.
inline LieMap contraction_isomorphism() {
  const Scalar alpha = Scalar::param(Param::alpha);
  const LieMap swap = rescaling_isomorphism(GammaParams::for_alpha(alpha), Scalar(1), {0, 2, 1});
  const ScalarVector src = contraction_scales(ContractionDirection::to_minus_one, alpha);
  const ScalarVector dst = contraction_scales(ContractionDirection::to_plus_one, -alpha);
  LieMap out;
  out.odd_square = swap.odd_square;
  for (std::size_t k = 0; k < 17; ++k) {
    LieVector v;
    for (const auto& [l, c] : swap.images[k].terms()) {
      Scalar entry = src[k] * c / dst[static_cast<std::size_t>(l)];
      v.add(l, limit_at(entry, Param::alpha, GaussianRational(-1)));
    }
    out.images.push_back(std::move(v));
  }
  return out;
}

}  // namespace superweyl
