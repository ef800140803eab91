#pragma once

#include <string>
#include <vector>

#include "superweyl/errors.hpp"
#include "superweyl/linalg.hpp"
#include "superweyl/realizations/phi.hpp"
#include "superweyl/report.hpp"
#include "superweyl/sampling.hpp"
#include "superweyl/sl22.hpp"

namespace superweyl {

/// Rejects lambda = 0 and ab = -1 when they are numbers.
inline void check_theta_parameters(const Scalar& lambda, const Scalar& a, const Scalar& b) {
  if (lambda.is_zero()) throw ParameterConstraintViolated("the (2|2)-dimensional representations need lambda != 0");
  const Scalar ab = a * b;
  if (ab.is_constant() && ab == Scalar(-1)) throw ParameterConstraintViolated("the (2|2)-dimensional representations need ab != -1");
}

/// s^2 = 1/(ab + 1).
inline Scalar theta_s_squared(const Scalar& a, const Scalar& b) { return Scalar(1) / (a * b + Scalar(1)); }

/// The matrices X~ acting on the span of t^lambda: t*tau -> lambda, tau^-1 o t^-1 -> 1/lambda.
inline ScalarSupermatrix tilde_lambda_matrix(std::string_view name, const Scalar& lambda, const Scalar& a, const Scalar& b) {
  return tilde_pattern<Scalar>(name, Scalar(1), lambda, Scalar(1) / lambda, a, b);
}

/// theta(Z) = coeff * s^s_power * target~ on the universal central extension.
/// On t^lambda, C+~ acts as lambda, C~ as 1 and C-~ as 1/lambda.
struct ThetaEntry {
  std::string name;
  std::string target;
  Scalar coeff;
  int s_power;
};

inline std::vector<ThetaEntry> theta_dictionary(const Scalar& a, const Scalar& b) {
  const Scalar one(1);
  return {{"C11", "D4", one, 1}, {"C12", "T2", one, 1}, {"C22", "T3", one, 1}, {"C21", "D1", one, 1},
          {"B11", "T4", one, 1}, {"B12", "T1", one, 1}, {"B22", "D3", one, 1}, {"B21", "D2", one, 1},
          {"E1", "E1", one, 0},  {"F1", "F1", one, 0},  {"H1", "H1", one, 0},
          {"E2", "E2", one, 0},  {"F2", "F2", one, 0},  {"H2", "H2", one, 0},
          {"c", "C", (a * b - one) / Scalar(2), 2}, {"c+", "C+", a, 2}, {"c-", "C-", b, 2}};
}

inline const ThetaEntry& find_theta_entry(const std::vector<ThetaEntry>& dict, std::string_view name) {
  for (const auto& e : dict) {
    if (e.name == name) return e;
  }
  throw UnknownGenerator("no image for '" + std::string(name) + "'");
}

/// theta images over the basis of `hat`, with the single factor s on odd
/// images stripped; brackets of two odd images are multiplied by s^2.
inline std::vector<ScalarSupermatrix> theta_images(const SuperLieAlgebra& hat, const Scalar& lambda, const Scalar& a, const Scalar& b) {
  check_theta_parameters(lambda, a, b);
  const auto dict = theta_dictionary(a, b);
  const Scalar s2 = theta_s_squared(a, b);
  std::vector<ScalarSupermatrix> out;
  for (const auto& basis : hat.basis()) {
    const ThetaEntry& e = find_theta_entry(dict, basis.name);
    Scalar k = e.coeff;
    for (int p = 0; p + 1 < e.s_power; p += 2) k *= s2;
    out.push_back(tilde_lambda_matrix(e.target, lambda, a, b) * k);
  }
  return out;
}

/// Graded subspace spanned by a subset of the standard basis vectors, given as a bit mask.
inline std::string coordinate_subspace_name(unsigned mask) {
  std::string out = "span(";
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    if (!(mask & (1u << k))) continue;
    if (!first) out += ", ";
    out += "e" + std::to_string(k + 1);
    first = false;
  }
  return out + ")";
}

/// Proper nonzero invariant subspaces of a (2|2) representation whose even
/// diagonal images separate the standard basis by their joint eigenvalues.
/// Every invariant subspace is then a sum of these weight lines, so trying
/// all 14 coordinate subspaces is exhaustive. Throws when the weights do not
/// separate the basis.
inline std::vector<unsigned> invariant_coordinate_subspaces(const std::vector<ScalarSupermatrix>& images) {
  std::vector<std::array<Scalar, 4>> weights;
  for (const auto& m : images) {
    bool diagonal = true;
    for (int i = 0; i < 4 && diagonal; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (i != j && !m(i, j).is_zero()) {
          diagonal = false;
          break;
        }
      }
    }
    if (diagonal) weights.push_back({m(0, 0), m(1, 1), m(2, 2), m(3, 3)});
  }
  for (int x = 0; x < 4; ++x) {
    for (int y = x + 1; y < 4; ++y) {
      bool separated = false;
      for (const auto& w : weights) separated = separated || w[static_cast<std::size_t>(x)] != w[static_cast<std::size_t>(y)];
      if (!separated) throw AlgebraError("diagonal images do not separate the standard basis");
    }
  }
  std::vector<unsigned> out;
  for (unsigned mask = 1; mask < 15; ++mask) {
    bool invariant = true;
    for (const auto& m : images) {
      for (int col = 0; col < 4 && invariant; ++col) {
        if (!(mask & (1u << col))) continue;
        for (int row = 0; row < 4; ++row) {
          if (!(mask & (1u << row)) && !m(row, col).is_zero()) {
            invariant = false;
            break;
          }
        }
      }
      if (!invariant) break;
    }
    if (invariant) out.push_back(mask);
  }
  return out;
}

/// Dimension of the associative algebra generated by the images (with 1).
inline std::size_t generated_algebra_dimension(const std::vector<ScalarSupermatrix>& images) {
  auto flat = [](const ScalarSupermatrix& m) {
    ScalarVector v;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) v.push_back(m(i, j));
    }
    return v;
  };
  std::vector<ScalarSupermatrix> span{ScalarSupermatrix::identity()};
  ScalarMatrix rows{flat(span[0])};
  for (std::size_t k = 0; k < span.size(); ++k) {
    for (const auto& g : images) {
      ScalarSupermatrix p = g * span[k];
      rows.push_back(flat(p));
      if (rank(rows) == rows.size()) span.push_back(p);
      else rows.pop_back();
    }
  }
  return span.size();
}

/// Random (lambda, a, b) with lambda, a, b nonzero and ab not in {0, 1, -1}.
inline std::array<Scalar, 3> sample_theta_point(Rng& rng) {
  while (true) {
    const Scalar lambda = sample_nonzero_gaussian_rational(rng);
    const Scalar a = sample_nonzero_gaussian_rational(rng);
    const Scalar b = sample_nonzero_gaussian_rational(rng);
    const Scalar ab = a * b;
    if (ab == Scalar(1) || ab == Scalar(-1)) continue;
    return {lambda, a, b};
  }
}

/// theta is a homomorphism from the universal central extension, in formal
/// (lambda, a, b) by default, and is irreducible at `points` seeded specializations.
inline Report verify_thm44(const Scalar& lambda = Scalar::param(Param::lambda), const Scalar& a = Scalar::param(Param::a),
                           const Scalar& b = Scalar::param(Param::b), std::uint64_t seed = 1, int points = 5) {
  Report report;
  report.theorem = "thm44";
  const SuperLieAlgebra hat = build_psl22_hat();
  const auto images = theta_images(hat, lambda, a, b);
  report.absorb(verify_homomorphism(
                    hat, images, ScalarSupermatrix(), theta_s_squared(a, b),
                    [](const ScalarSupermatrix& x, const ScalarSupermatrix& y) { return supercommutator(x, y); },
                    [](const ScalarSupermatrix& x, const ScalarSupermatrix& y) { return x == y; },
                    [](const ScalarSupermatrix& m) { return m.to_string(); }),
                hat, "representation");
  Rng rng(seed);
  for (int k = 0; k < points; ++k) {
    auto [l0, a0, b0] = sample_theta_point(rng);
    const auto at = [&](const Scalar& x) {
      return x.substitute(Param::lambda, l0.constant_value()).substitute(Param::a, a0.constant_value()).substitute(Param::b, b0.constant_value());
    };
    std::vector<ScalarSupermatrix> special;
    for (const auto& m : images) special.push_back(m.map_entries(at));
    const std::string where = "at lambda = " + l0.to_string() + ", a = " + a0.to_string() + ", b = " + b0.to_string();
    for (unsigned mask : invariant_coordinate_subspaces(special)) report.fail("invariant subspace " + coordinate_subspace_name(mask) + " " + where);
    if (generated_algebra_dimension(special) != 16) report.fail("images do not generate all of End(C^{2|2}) " + where);
    ++report.pairs_checked;
    report.notes.push_back("irreducible " + where);
  }
  return report;
}

}  // namespace superweyl
