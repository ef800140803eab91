#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "superweyl/errors.hpp"
#include "superweyl/gamma.hpp"
#include "superweyl/linalg.hpp"
#include "superweyl/report.hpp"
#include "superweyl/supersymbol.hpp"
#include "superweyl/supersymbol_io.hpp"

namespace superweyl {

/// How the cubic terms of D3 and D4 are read in the deformed family.
/// `eta_first` multiplies eta1*eta2*xi_k as written, in Lambda_h(4), which
/// produces extra h-terms; `normal_ordered` takes the xi-first words of the
/// undeformed family verbatim.
enum class DOrdering { eta_first, normal_ordered };

namespace rho_detail {

struct GeneratorText {
  const char* name;
  const char* undeformed;
  const char* deformed;
};

// Generators of the image of Gamma(2, -1 - alpha, alpha - 1) in P+(4), and of
// the deformed family in P_h+(4) (with eta-first cubic words for D3, D4).
inline const std::vector<GeneratorText>& generator_texts() {
  static const std::vector<GeneratorText> table{
      {"E1", "t^2", "t^2"},
      {"H1", "t*tau", "t*tau + ((alpha+1)/2)*h"},
      {"F1", "tau^2 - 2*alpha*t^-2*xi1*xi2*eta1*eta2",
       "tau^2 - 2*alpha*t^-2*xi1*xi2*eta1*eta2 - alpha*h*t^-2*xi1*eta1 - alpha*h*t^-2*xi2*eta2 + alpha*h*t^-1*tau"},
      {"E2", "xi1*xi2", "xi1*xi2"},
      {"H2", "xi1*eta1 + xi2*eta2", "xi1*eta1 + xi2*eta2 - h"},
      {"F2", "eta1*eta2", "eta1*eta2"},
      {"E3", "xi1*eta2", "xi1*eta2"},
      {"H3", "xi1*eta1 - xi2*eta2", "xi1*eta1 - xi2*eta2"},
      {"F3", "xi2*eta1", "xi2*eta1"},
      {"T1", "t*eta1", "t*eta1"},
      {"T2", "t*eta2", "t*eta2"},
      {"T3", "t*xi1", "t*xi1"},
      {"T4", "t*xi2", "t*xi2"},
      {"D1", "tau*xi1 + alpha*t^-1*xi1*xi2*eta2", "tau*xi1 + alpha*t^-1*xi1*xi2*eta2"},
      {"D2", "tau*xi2 - alpha*t^-1*xi1*xi2*eta1", "tau*xi2 - alpha*t^-1*xi1*xi2*eta1"},
      {"D3", "tau*eta1 + alpha*t^-1*xi2*eta1*eta2", "tau*eta1 + alpha*t^-1*eta1*eta2*xi2"},
      {"D4", "tau*eta2 - alpha*t^-1*xi1*eta1*eta2", "tau*eta2 - alpha*t^-1*eta1*eta2*xi1"},
  };
  return table;
}

inline const GeneratorText& find_text(std::string_view name) {
  for (const auto& g : generator_texts()) {
    if (g.name == name) return g;
  }
  throw UnknownGenerator("unknown generator '" + std::string(name) + "'");
}

inline SuperSymbol specialize_alpha(SuperSymbol s, const Scalar& alpha) {
  if (alpha == Scalar::param(Param::alpha)) return s;
  return s.map_symbols([&](const Symbol& x) {
    return x.map_coefficients([&](const Scalar& c) { return c.substitute(Param::alpha, alpha); });
  });
}

}  // namespace rho_detail

/// rho_alpha(name) in P+(4); `alpha` defaults to the formal parameter.
inline SuperSymbol rho_alpha(std::string_view name, const Scalar& alpha = Scalar::param(Param::alpha),
                             int cutoff = Symbol::kDefaultCutoff) {
  const auto& g = rho_detail::find_text(name);
  return rho_detail::specialize_alpha(parse_supersymbol(g.undeformed, 2, Scalar(), cutoff), alpha);
}

/// rho_{alpha,h}(name) in P_h+(4) with h formal.
inline SuperSymbol rho_alpha_h(std::string_view name, DOrdering ordering = DOrdering::eta_first,
                               const Scalar& alpha = Scalar::param(Param::alpha), int cutoff = Symbol::kDefaultCutoff) {
  const auto& g = rho_detail::find_text(name);
  const Scalar h = Scalar::param(Param::h);
  std::string text = g.deformed;
  if (ordering == DOrdering::normal_ordered && (name == "D3" || name == "D4")) text = g.undeformed;
  return rho_detail::specialize_alpha(parse_supersymbol(text, 2, h, cutoff), alpha);
}

inline std::vector<SuperSymbol> rho_alpha_images(const SuperLieAlgebra& G, const Scalar& alpha = Scalar::param(Param::alpha)) {
  std::vector<SuperSymbol> out;
  for (const auto& b : G.basis()) out.push_back(rho_alpha(b.name, alpha));
  return out;
}

inline std::vector<SuperSymbol> rho_alpha_h_images(const SuperLieAlgebra& G, DOrdering ordering,
                                                   const Scalar& alpha = Scalar::param(Param::alpha)) {
  std::vector<SuperSymbol> out;
  for (const auto& b : G.basis()) out.push_back(rho_alpha_h(b.name, ordering, alpha));
  return out;
}

/// Coordinates of super-symbols in the monomial basis c * t^e * tau^d * X, for rank tests.
inline ScalarMatrix symbol_coordinates(const std::vector<SuperSymbol>& xs) {
  std::map<std::tuple<GrassmannMonomial, int, int>, std::size_t> index;
  for (const auto& x : xs) {
    for (const auto& [m, s] : x.terms()) {
      for (const auto& [d, p] : s.terms()) {
        for (const auto& [e, c] : p.terms()) index.try_emplace({m, d, e}, index.size());
      }
    }
  }
  ScalarMatrix rows;
  for (const auto& x : xs) {
    ScalarVector row(index.size());
    for (const auto& [m, s] : x.terms()) {
      for (const auto& [d, p] : s.terms()) {
        for (const auto& [e, c] : p.terms()) row[index.at({m, d, e})] = c;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Writes `target` as a combination of the images, if it lies in their span.
inline std::optional<LieVector> express_in_images(const std::vector<SuperSymbol>& images, const SuperSymbol& target) {
  std::vector<SuperSymbol> all = images;
  all.push_back(target);
  ScalarMatrix rows = symbol_coordinates(all);
  const ScalarVector t = rows.back();
  rows.pop_back();
  const auto x = solve_in_span(rows, t);
  if (!x) return std::nullopt;
  LieVector v;
  for (std::size_t k = 0; k < x->size(); ++k) v.add(static_cast<int>(k), (*x)[k]);
  return v;
}

inline HomomorphismResult verify_symbol_map(const SuperLieAlgebra& G, const std::vector<SuperSymbol>& images, bool deformed) {
  return verify_homomorphism(
      G, images, SuperSymbol(), Scalar(1),
      [deformed](const SuperSymbol& a, const SuperSymbol& b) { return deformed ? super_bracket_h(a, b) : super_poisson(a, b); },
      [](const SuperSymbol& a, const SuperSymbol& b) { return agrees(a, b); },
      [](const SuperSymbol& s) { return s.to_string(); });
}

/// Embedding of Gamma(2, -1 - alpha, alpha - 1) into P+(4) under the super
/// Poisson bracket, for formal or specialized alpha.
inline Report verify_prop21(const Scalar& alpha = Scalar::param(Param::alpha)) {
  Report report;
  report.theorem = "prop21";
  SuperLieAlgebra G = build_gamma(GammaParams::for_alpha(alpha));
  std::vector<SuperSymbol> images = rho_alpha_images(G, alpha);
  report.absorb(verify_symbol_map(G, images, false), G, "poisson");
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (!images[k].is_differential()) report.fail(G.name(static_cast<int>(k)) + " is not a differential operator");
  }
  if (rank(symbol_coordinates(images)) != G.dim()) report.fail("images are linearly dependent");
  return report;
}

/// The deformed family under [ , ]_h, its h -> 0 limit, and the D3/D4 reading.
inline Report verify_thm31_symbols(const Scalar& alpha = Scalar::param(Param::alpha)) {
  Report report;
  report.theorem = "thm31";
  SuperLieAlgebra G = build_gamma(GammaParams::for_alpha(alpha));
  std::vector<SuperSymbol> eta_first = rho_alpha_h_images(G, DOrdering::eta_first, alpha);
  std::vector<SuperSymbol> normal = rho_alpha_h_images(G, DOrdering::normal_ordered, alpha);
  HomomorphismResult r_eta = verify_symbol_map(G, eta_first, true);
  HomomorphismResult r_normal = verify_symbol_map(G, normal, true);
  report.absorb(r_eta, G, "deformed bracket");
  if (!r_normal.ok()) {
    report.errata.push_back("D3, D4 with the cubic words xi_k*eta1*eta2 (undeformed form) fail the deformed bracket table; " +
                            std::to_string(r_normal.failures.size()) + "+ pairs differ, first [" + G.name(r_normal.failures[0].x) +
                            ", " + G.name(r_normal.failures[0].y) + "]");
  } else {
    report.notes.push_back("both readings of D3, D4 satisfy the deformed bracket table");
  }
  for (std::size_t k = 0; k < eta_first.size(); ++k) {
    ++report.pairs_checked;
    SuperSymbol limit = eta_first[k].substitute(Param::h, GaussianRational(0));
    if (!agrees(limit, rho_alpha(G.name(static_cast<int>(k)), alpha))) {
      report.fail("h -> 0 limit of " + G.name(static_cast<int>(k)) + " is " + limit.to_string());
    }
    if (!eta_first[k].is_differential()) report.fail(G.name(static_cast<int>(k)) + " is not a differential operator");
  }
  if (rank(symbol_coordinates(eta_first)) != G.dim()) report.fail("deformed images are linearly dependent");
  return report;
}

}  // namespace superweyl
