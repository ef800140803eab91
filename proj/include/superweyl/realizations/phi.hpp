#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "superweyl/errors.hpp"
#include "superweyl/gamma.hpp"
#include "superweyl/matsuper.hpp"
#include "superweyl/relation_tables.hpp"
#include "superweyl/report.hpp"
#include "superweyl/sampling.hpp"

namespace superweyl {

/// Rejects ab in {0, 1, -1} when ab is a number.
inline void check_phi_parameters(const Scalar& a, const Scalar& b) {
  const Scalar ab = a * b;
  if (!ab.is_constant()) return;
  if (ab.is_zero() || ab == Scalar(1) || ab == Scalar(-1)) {
    throw ParameterConstraintViolated("the pseudodifferential realization needs ab != 0, 1, -1; got ab = " + ab.to_string());
  }
}

/// q^2 = 2/(1 + ab).
inline Scalar phi_q_squared(const Scalar& a, const Scalar& b) { return Scalar(2) / (Scalar(1) + a * b); }

/// The pattern shared by the matrices over W~ and their evaluations on
/// t^lambda: `ttau` stands for t*tau (or lambda), `inv` for tau^-1 o t^-1 (or
/// 1/lambda).
template <class C>
BlockSupermatrix<C> tilde_pattern(std::string_view name, const C& one, const C& ttau, const C& inv, const C& a, const C& b) {
  using M = BlockSupermatrix<C>;
  auto put = [](std::initializer_list<std::tuple<int, int, C>> entries) {
    M m;
    for (const auto& [r, c, w] : entries) m(r - 1, c - 1) = w;
    return m;
  };
  if (name == "C+") return M::scalar_identity(ttau);
  if (name == "C") return M::scalar_identity(one);
  if (name == "C-") return M::scalar_identity(inv);
  if (name == "E1") return put({{1, 2, one}});
  if (name == "F1") return put({{2, 1, one}});
  if (name == "H1") return put({{1, 1, one}, {2, 2, -one}});
  if (name == "E2") return put({{4, 3, one}});
  if (name == "F2") return put({{3, 4, one}});
  if (name == "H2") return put({{3, 3, one}, {4, 4, -one}});
  if (name == "T3") return put({{1, 3, ttau}, {4, 2, a}});
  if (name == "T2") return put({{1, 4, -ttau}, {3, 2, a}});
  if (name == "D4") return put({{2, 4, ttau}, {3, 1, a}});
  if (name == "D1") return put({{2, 3, -ttau}, {4, 1, a}});
  if (name == "T1") return put({{1, 4, b}, {3, 2, inv}});
  if (name == "T4") return put({{1, 3, b}, {4, 2, -inv}});
  if (name == "D2") return put({{2, 3, b}, {4, 1, inv}});
  if (name == "D3") return put({{2, 4, b}, {3, 1, -inv}});
  throw UnknownGenerator("unknown matrix '" + std::string(name) + "'");
}

/// The matrices E1~, ..., D4~, C+~, C~, C-~ over W~ = P_{h=1}.
inline WeylSupermatrix tilde_matrix(std::string_view name, const Scalar& a, const Scalar& b, int cutoff = Symbol::kDefaultCutoff) {
  const WeylElement ttau = WeylElement::t(1, cutoff) * WeylElement::d(1, cutoff);
  const WeylElement inv = WeylElement::d(-1, cutoff) * WeylElement::t(-1, cutoff);  // tau^-1 o t^-1
  return tilde_pattern<WeylElement>(name, WeylElement(1).with_cutoff(cutoff), ttau, inv, WeylElement(a).with_cutoff(cutoff),
                                    WeylElement(b).with_cutoff(cutoff));
}

/// phi(X) = coeff * q^q_power * X~ for the contracted algebra.
struct PhiEntry {
  std::string name;
  Scalar coeff;
  int q_power;
};

inline std::vector<PhiEntry> phi_dictionary(const Scalar& a, const Scalar& b) {
  const Scalar i = Scalar::i();
  return {{"T1", -i, 1},        {"T2", Scalar(1), 1}, {"T3", i, 1},         {"T4", Scalar(1), 1},
          {"D1", i, 1},         {"D2", Scalar(-1), 1}, {"D3", i, 1},        {"D4", Scalar(1), 1},
          {"E1", Scalar(2), 0}, {"H1", Scalar(1), 0}, {"F1", Scalar(-2), 0},
          {"E2", i, 0},         {"H2", Scalar(-1), 0}, {"F2", i, 0},
          {"C", Scalar(1) - a * b, 2}, {"C+", a * i, 2}, {"C-", -(b * i), 2}};
}

inline const PhiEntry& find_phi_entry(const std::vector<PhiEntry>& dict, std::string_view name) {
  for (const auto& e : dict) {
    if (e.name == name) return e;
  }
  throw UnknownGenerator("no image for '" + std::string(name) + "'");
}

/// phi images over the basis of `G`, with the single factor q on odd images
/// stripped; brackets of two odd images are multiplied by q^2 instead.
inline std::vector<WeylSupermatrix> phi_images(const SuperLieAlgebra& G, const Scalar& a, const Scalar& b, int cutoff) {
  check_phi_parameters(a, b);
  const auto dict = phi_dictionary(a, b);
  const Scalar q2 = phi_q_squared(a, b);
  std::vector<WeylSupermatrix> out;
  for (const auto& basis : G.basis()) {
    const PhiEntry& e = find_phi_entry(dict, basis.name);
    Scalar k = e.coeff;
    for (int p = 0; p + 1 < e.q_power; p += 2) k *= q2;
    out.push_back(tilde_matrix(e.name, a, b, cutoff) * k);
  }
  return out;
}

/// Contracted algebra as given by its printed relation tables.
inline SuperLieAlgebra printed_contracted_gamma() {
  return algebra_from_relations(contracted_basis(ContractionDirection::to_plus_one), printed_contracted_relations());
}

/// phi is a homomorphism from the contracted algebra into matrices over W~
/// at each cutoff, and brackets computed at different cutoffs agree where both
/// are valid.
inline Report verify_thm42(const Scalar& a, const Scalar& b, const std::vector<int>& cutoffs = {-8, -12}) {
  Report report;
  report.theorem = "thm42";
  report.cutoffs = cutoffs;
  check_phi_parameters(a, b);
  const SuperLieAlgebra G = printed_contracted_gamma();
  const Scalar q2 = phi_q_squared(a, b);
  std::vector<std::vector<WeylSupermatrix>> brackets;
  for (int cutoff : cutoffs) {
    const auto images = phi_images(G, a, b, cutoff);
    const HomomorphismResult r = verify_homomorphism(
        G, images, WeylSupermatrix(), q2, [](const WeylSupermatrix& x, const WeylSupermatrix& y) { return supercommutator(x, y); },
        [](const WeylSupermatrix& x, const WeylSupermatrix& y) { return x == y; }, [](const WeylSupermatrix& m) { return m.to_string(); });
    report.absorb(r, G, "cutoff " + std::to_string(cutoff));
    std::vector<WeylSupermatrix> table;
    for (std::size_t i = 0; i < images.size(); ++i) {
      for (std::size_t j = i; j < images.size(); ++j) table.push_back(supercommutator(images[i], images[j]));
    }
    brackets.push_back(std::move(table));
  }
  for (std::size_t c = 1; c < brackets.size(); ++c) {
    for (std::size_t k = 0; k < brackets[0].size(); ++k) {
      if (!(brackets[0][k] == brackets[c][k])) {
        report.fail("brackets at cutoffs " + std::to_string(cutoffs[0]) + " and " + std::to_string(cutoffs[c]) + " disagree on their overlap");
        break;
      }
    }
  }
  return report;
}

/// Random (a, b) with ab not in {0, 1, -1}.
inline std::array<Scalar, 2> sample_phi_point(Rng& rng) {
  while (true) {
    const Scalar a = sample_nonzero_gaussian_rational(rng);
    const Scalar b = sample_nonzero_gaussian_rational(rng);
    const Scalar ab = a * b;
    if (ab == Scalar(1) || ab == Scalar(-1)) continue;
    return {a, b};
  }
}

/// verify_thm42 at `points` seeded (a, b).
inline Report verify_thm42_seeded(std::uint64_t seed = 1, int points = 5, const std::vector<int>& cutoffs = {-8, -12}) {
  Report report;
  report.theorem = "thm42";
  report.cutoffs = cutoffs;
  Rng rng(seed);
  for (int k = 0; k < points; ++k) {
    const auto [a, b] = sample_phi_point(rng);
    const std::string where = "a = " + a.to_string() + ", b = " + b.to_string();
    report.merge(verify_thm42(a, b, cutoffs), where + ": ");
    report.notes.push_back("checked " + where);
  }
  return report;
}

}  // namespace superweyl
