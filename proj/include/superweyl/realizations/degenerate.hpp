#pragma once

#include <string>
#include <vector>

#include "superweyl/gamma.hpp"
#include "superweyl/realizations/isomorphism.hpp"
#include "superweyl/report.hpp"
#include "superweyl/sl22.hpp"

namespace superweyl {

/// sl(2) with [H, E] = 2E, [H, F] = -2F, [E, F] = H.
inline SuperLieAlgebra build_sl2() {
  SuperLieAlgebra L({{"E", 0}, {"H", 0}, {"F", 0}});
  L.set_bracket(1, 0, LieVector::unit(0, Scalar(2)));
  L.set_bracket(1, 2, LieVector::unit(2, Scalar(-2)));
  L.set_bracket(0, 2, LieVector::unit(1));
  return L;
}

/// Basis indices of the psl(2|2) copy inside Gamma(2, -1 - alpha, alpha - 1)
/// at alpha = 1 (sl(2) copies 1, 2) or alpha = -1 (copies 1, 3), plus all T, D.
inline std::vector<int> degenerate_span(const SuperLieAlgebra& G, int alpha_sign) {
  const std::string kept = alpha_sign > 0 ? "2" : "3";
  std::vector<int> span;
  for (const std::string& n : std::vector<std::string>{"E1", "H1", "F1", "E" + kept, "H" + kept, "F" + kept}) span.push_back(G.index_of(n));
  for (int k = 1; k <= 4; ++k) {
    span.push_back(G.index_of("T" + std::to_string(k)));
    span.push_back(G.index_of("D" + std::to_string(k)));
  }
  return span;
}

/// Map from the psl(2|2) copy at alpha = +/-1 onto build_psl22(): the
/// contracted algebra modulo its centre, sent through the isomorphism onto
/// the universal central extension with the central part dropped.
inline std::vector<LieVector> degenerate_psl_map(const SuperLieAlgebra& span_algebra, int alpha_sign, const SuperLieAlgebra& psl) {
  const SuperLieAlgebra plus = contract_gamma(ContractionDirection::to_plus_one);
  const SuperLieAlgebra hat = build_psl22_hat();
  const LieMap to_hat = find_isomorphism_to_hat_psl(plus, hat);
  std::vector<LieVector> out;
  const SuperLieAlgebra minus = contract_gamma(ContractionDirection::to_minus_one);
  const LieMap swap = contraction_isomorphism();
  for (const auto& b : span_algebra.basis()) {
    LieVector in_plus = alpha_sign > 0 ? LieVector::unit(plus.index_of(b.name)) : swap.images[static_cast<std::size_t>(minus.index_of(b.name))];
    LieVector in_hat;
    for (const auto& [k, c] : in_plus.terms()) in_hat.add_scaled(to_hat.images[static_cast<std::size_t>(k)], c);
    LieVector in_psl;
    for (const auto& [k, c] : in_hat.terms()) {
      const std::string& name = hat.name(k);
      if (psl.contains(name)) in_psl.add(psl.index_of(name), c);
    }
    out.push_back(std::move(in_psl));
  }
  return out;
}

/// At alpha = +/-1: the 14-element span is an ideal isomorphic to psl(2|2),
/// and the quotient is sl(2).
inline Report degenerate_subalgebras(int alpha_sign) {
  Report report;
  report.theorem = "degenerate";
  if (alpha_sign != 1 && alpha_sign != -1) throw ParameterConstraintViolated("degenerate cases are alpha = 1 and alpha = -1");
  const SuperLieAlgebra G = build_gamma(GammaParams::for_alpha(Scalar(alpha_sign)));
  const std::vector<int> span = degenerate_span(G, alpha_sign);
  if (!is_subalgebra(G, span)) {
    report.fail("span is not closed under the bracket");
    return report;
  }
  if (!is_ideal(G, span)) report.fail("span is not an ideal");
  if (!is_lie_superalgebra(G)) report.fail("jacobiator does not vanish");

  const SuperLieAlgebra sub = restrict_to(G, span);
  const SuperLieAlgebra psl = build_psl22();
  const std::vector<LieVector> images = degenerate_psl_map(sub, alpha_sign, psl);
  report.absorb(verify_lie_map(sub, psl, images), sub, "psl(2|2)");
  if (!is_bijective(sub, psl, images)) report.fail("map onto psl(2|2) is not bijective");

  if (report.failures.empty()) {
    const SuperLieAlgebra q = quotient(G, span);
    const SuperLieAlgebra sl2 = build_sl2();
    bool matched = false;
    for (long sign : {1L, -1L}) {
      const std::vector<LieVector> to_sl2{LieVector::unit(0), LieVector::unit(1), LieVector::unit(2, Scalar(sign))};
      const HomomorphismResult r = verify_lie_map(q, sl2, to_sl2);
      report.pairs_checked += r.pairs_checked;
      if (r.ok()) {
        report.notes.push_back("quotient: " + q.name(0) + " -> E, " + q.name(1) + " -> H, " + q.name(2) + " -> " + (sign > 0 ? "F" : "-F"));
        matched = true;
        break;
      }
    }
    if (!matched) report.fail("quotient is not sl(2) under E, H, +/-F");
  }
  return report;
}

}  // namespace superweyl
