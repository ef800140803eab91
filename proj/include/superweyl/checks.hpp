#pragma once

#include <string>
#include <vector>

#include "superweyl/gamma.hpp"
#include "superweyl/relation_tables.hpp"
#include "superweyl/report.hpp"
#include "superweyl/sl22.hpp"

namespace superweyl {

/// Jacobiator of Gamma(sigma). With formal sigma every coordinate must be
/// divisible by sigma1 + sigma2 + sigma3 and vanish on the plane where the sum
/// is zero; with numeric sigma the jacobiator must vanish exactly when the sum does.
inline Report verify_jacobi(const GammaParams& p) {
  Report report;
  report.theorem = "jacobi";
  const SuperLieAlgebra G = build_gamma(p);
  if (G.even_dim() != 9 || G.odd_dim() != 8) report.fail("dimension is not (9|8)");
  const auto jac = jacobiator(G);
  const std::size_t n = G.dim();
  report.pairs_checked = n * (n + 1) * (n + 2) / 6;
  const Scalar sum = p[0] + p[1] + p[2];
  if (sum.is_constant()) {
    if (sum.is_zero() && !jac.empty()) report.fail(std::to_string(jac.size()) + " triples have a nonzero jacobiator although sigma1 + sigma2 + sigma3 = 0");
    if (!sum.is_zero() && jac.empty()) report.fail("jacobiator vanishes although sigma1 + sigma2 + sigma3 != 0");
    if (!sum.is_zero()) report.notes.push_back(std::to_string(jac.size()) + " triples have a nonzero jacobiator");
    if (!sum.is_zero()) report.fail("not a Lie superalgebra: sigma1 + sigma2 + sigma3 = " + sum.to_string());
    return report;
  }
  if (!sum.is_polynomial()) throw AlgebraError("sigma1 + sigma2 + sigma3 must be a polynomial");
  for (const auto& [triple, v] : jac) {
    const auto [x, y, z] = triple;
    for (const auto& [k, c] : v.terms()) {
      if (!c.num().exact_divide(sum.num())) {
        report.fail("jacobiator (" + G.name(x) + ", " + G.name(y) + ", " + G.name(z) + ") has coordinate " + c.to_string() +
                    " on " + G.name(k) + ", not divisible by " + sum.to_string());
      }
    }
  }
  report.notes.push_back(std::to_string(jac.size()) + " triples have a nonzero jacobiator, each divisible by " + sum.to_string());
  const GammaParams plane{p.sigma1, p.sigma2, -(p.sigma1 + p.sigma2)};
  const auto on_plane = jacobiator(build_gamma(plane));
  report.pairs_checked += report.pairs_checked;
  if (!on_plane.empty()) report.fail(std::to_string(on_plane.size()) + " triples have a nonzero jacobiator with sigma3 = -sigma1 - sigma2");
  return report;
}

/// The cocycle on psl(2|2): closed on every basis triple, not a coboundary,
/// and its central extension is a (9|8) Lie superalgebra.
inline Report verify_cocycle() {
  Report report;
  report.theorem = "cocycle";
  const SuperLieAlgebra psl = build_psl22();
  if (psl.even_dim() != 6 || psl.odd_dim() != 8) report.fail("psl(2|2) does not have dimension (6|8)");
  if (!is_lie_superalgebra(psl)) report.fail("psl(2|2) jacobiator does not vanish");
  const Cochain2 f = psl22_cocycle(psl);
  const std::size_t n = psl.dim();
  report.pairs_checked = n * (n + 1) * (n + 2) / 6;
  for (const auto& [triple, v] : cochain_differential(f)) {
    const auto [x, y, z] = triple;
    report.fail("df(" + psl.name(x) + ", " + psl.name(y) + ", " + psl.name(z) + ") != 0");
  }
  // d of a 1-cochain vanishes on a commuting pair, while f(C22, C11) = c+.
  const int c22 = psl.index_of("C22");
  const int c11 = psl.index_of("C11");
  if (!psl.bracket(c22, c11).is_zero()) report.fail("[C22, C11] != 0");
  if (!(f(c22, c11) == LieVector::unit(f.center_index("c+")))) report.fail("f(C22, C11) != c+");
  else report.notes.push_back("f is not a coboundary: [C22, C11] = 0 but f(C22, C11) = c+");
  const SuperLieAlgebra hat = central_extension(psl, f);
  if (hat.even_dim() != 9 || hat.odd_dim() != 8) report.fail("central extension does not have dimension (9|8)");
  if (!is_lie_superalgebra(hat)) report.fail("central extension jacobiator does not vanish");
  return report;
}

/// The contraction at alpha -> 1 reproduces the printed relations, and the
/// one at alpha -> -1 is isomorphic to it.
inline Report verify_contraction() {
  Report report;
  report.theorem = "contraction";
  const SuperLieAlgebra plus = contract_gamma(ContractionDirection::to_plus_one);
  const SuperLieAlgebra printed = algebra_from_relations(plus.basis(), printed_contracted_relations());
  for (const auto& d : bracket_differences(plus, printed)) report.fail("alpha -> 1: " + d);
  const SuperLieAlgebra minus = contract_gamma(ContractionDirection::to_minus_one);
  const LieMap iso = contraction_isomorphism();
  report.absorb(verify_lie_map(minus, plus, iso.images, iso.odd_square), minus, "alpha -> -1");
  if (!is_bijective(minus, plus, iso.images)) report.fail("alpha -> -1: relabeling is not bijective");
  for (const auto* L : {&plus, &minus}) {
    if (!is_lie_superalgebra(*L)) report.fail("contracted jacobiator does not vanish");
    for (const std::string c : {"C+", "C", "C-"}) {
      for (int k = 0; k < static_cast<int>(L->dim()); ++k) {
        if (!L->bracket(L->index_of(c), k).is_zero()) report.fail(c + " is not central");
      }
    }
  }
  report.pairs_checked += 17 * 18 / 2;
  return report;
}

}  // namespace superweyl
