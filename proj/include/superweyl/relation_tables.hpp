#pragma once

#include <string>
#include <vector>

#include "superweyl/gamma.hpp"
#include "superweyl/superlie_io.hpp"

namespace superweyl {

/// One printed bracket relation [x, y] = value.
struct Relation {
  std::string x;
  std::string y;
  std::string value;
};

namespace tables_detail {

inline void append(std::vector<Relation>& out, std::initializer_list<Relation> rs) { out.insert(out.end(), rs); }

// Relations shared by Gamma(2, -1 - alpha, alpha - 1) and its contraction.
inline void common_relations(std::vector<Relation>& r) {
  append(r, {{"T1", "T3", "E1"}, {"T2", "T4", "E1"}, {"D1", "D3", "F1"}, {"D2", "D4", "F1"},
             {"E1", "D1", "-2*T3"}, {"E1", "D2", "-2*T4"}, {"E1", "D3", "-2*T1"}, {"E1", "D4", "-2*T2"},
             {"F1", "T1", "2*D3"}, {"F1", "T2", "2*D4"}, {"F1", "T3", "2*D1"}, {"F1", "T4", "2*D2"}});
  append(r, {{"E2", "T1", "-T4"}, {"E2", "D4", "D1"}, {"F2", "T4", "T1"}, {"F2", "D1", "-D4"},
             {"E2", "T2", "T3"}, {"E2", "D3", "-D2"}, {"F2", "T3", "-T2"}, {"F2", "D2", "D3"}});
  append(r, {{"E1", "F1", "-4*H1"}, {"E2", "F2", "-H2"},
             {"H1", "E1", "2*E1"}, {"H1", "F1", "-2*F1"}, {"H2", "E2", "2*E2"}, {"H2", "F2", "-2*F2"}});
  for (int k = 1; k <= 4; ++k) {
    const std::string t = "T" + std::to_string(k);
    const std::string d = "D" + std::to_string(k);
    append(r, {{"H1", t, t}, {"H1", d, "-" + d}});
    append(r, {{"H2", t, (k <= 2 ? "-" : "") + t}, {"H2", d, (k <= 2 ? "" : "-") + d}});
  }
}

}  // namespace tables_detail

/// Nonzero brackets of Gamma(2, -1 - alpha, alpha - 1) as printed in its
/// relation tables, including [E3, F3] = -H3.
inline std::vector<Relation> printed_gamma_alpha_relations() {
  std::vector<Relation> r;
  tables_detail::common_relations(r);
  tables_detail::append(r, {{"E3", "T1", "-T2"}, {"E3", "D2", "D1"}, {"F3", "T2", "-T1"}, {"F3", "D1", "D2"},
                            {"E3", "T4", "T3"}, {"E3", "D3", "-D4"}, {"F3", "T3", "T4"}, {"F3", "D4", "-D3"}});
  for (int k = 1; k <= 4; ++k) {
    const std::string t = "T" + std::to_string(k);
    const std::string d = "D" + std::to_string(k);
    const bool upper = k == 1 || k == 4;
    tables_detail::append(r, {{"H3", t, (upper ? "-" : "") + t}, {"H3", d, (upper ? "" : "-") + d}});
  }
  tables_detail::append(r, {{"E3", "F3", "-H3"}, {"H3", "E3", "2*E3"}, {"H3", "F3", "-2*F3"}});
  tables_detail::append(r, {{"D1", "T4", "(1+alpha)*E2"}, {"T1", "D4", "(-1-alpha)*F2"},
                            {"D2", "T3", "(-1-alpha)*E2"}, {"T2", "D3", "(1+alpha)*F2"},
                            {"T3", "D4", "(alpha-1)*E3"}, {"T4", "D3", "(alpha-1)*F3"},
                            {"T2", "D1", "(1-alpha)*E3"}, {"T1", "D2", "(1-alpha)*F3"},
                            {"T1", "D1", "H1 + ((1+alpha)/2)*H2 + ((1-alpha)/2)*H3"},
                            {"T2", "D2", "H1 + ((1+alpha)/2)*H2 + ((alpha-1)/2)*H3"},
                            {"T3", "D3", "H1 - ((1+alpha)/2)*H2 + ((alpha-1)/2)*H3"},
                            {"T4", "D4", "H1 - ((1+alpha)/2)*H2 + ((1-alpha)/2)*H3"}});
  return r;
}

/// Nonzero brackets of the contraction at alpha -> 1 as printed.
inline std::vector<Relation> printed_contracted_relations() {
  std::vector<Relation> r;
  tables_detail::common_relations(r);
  tables_detail::append(r, {{"T1", "D4", "-2*F2"}, {"T2", "D3", "2*F2"}, {"D1", "T4", "2*E2"}, {"D2", "T3", "-2*E2"},
                            {"T3", "D4", "C+"}, {"T4", "D3", "C-"}, {"T1", "D2", "-C-"}, {"T2", "D1", "-C+"},
                            {"T1", "D1", "H1 + H2 - C/2"}, {"T2", "D2", "H1 + H2 + C/2"},
                            {"T3", "D3", "H1 - H2 + C/2"}, {"T4", "D4", "H1 - H2 - C/2"}});
  return r;
}

/// Algebra on `basis` whose only nonzero brackets are `relations`. A pair given
/// twice must agree.
inline SuperLieAlgebra algebra_from_relations(const std::vector<BasisElement>& basis, const std::vector<Relation>& relations) {
  SuperLieAlgebra L(basis);
  for (const auto& r : relations) {
    const int i = L.index_of(r.x);
    const int j = L.index_of(r.y);
    const LieVector v = parse_combination(r.value, L);
    if (!L.bracket(i, j).is_zero() && !(L.bracket(i, j) == v)) {
      throw AlgebraError("conflicting relations for [" + r.x + ", " + r.y + "]");
    }
    L.set_bracket(i, j, v);
  }
  return L;
}

/// Pairs (i <= j) whose brackets differ, as readable lines.
inline std::vector<std::string> bracket_differences(const SuperLieAlgebra& computed, const SuperLieAlgebra& printed) {
  if (computed.basis() != printed.basis()) throw AlgebraError("bases differ");
  std::vector<std::string> out;
  const int n = static_cast<int>(computed.dim());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (computed.bracket(i, j) == printed.bracket(i, j)) continue;
      out.push_back("[" + computed.name(i) + ", " + computed.name(j) + "] is " + computed.format(computed.bracket(i, j)) +
                    ", printed " + printed.format(printed.bracket(i, j)));
    }
  }
  return out;
}

}  // namespace superweyl
