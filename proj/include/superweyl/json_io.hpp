#pragma once

#include <string>

#include <json.hpp>

#include "superweyl/errors.hpp"
#include "superweyl/matsuper.hpp"
#include "superweyl/report.hpp"
#include "superweyl/scalar_io.hpp"
#include "superweyl/superlie.hpp"

namespace superweyl {

using Json = nlohmann::json;

/// {"basis":[{"name":..,"parity":..}], "brackets":[{"x":..,"y":..,"value":{name: scalar}}]}.
/// Each unordered pair appears once (x before y in basis order); keys are sorted.
inline Json to_json(const SuperLieAlgebra& L) {
  Json basis = Json::array();
  for (const auto& b : L.basis()) basis.push_back({{"name", b.name}, {"parity", b.parity}});
  Json brackets = Json::array();
  const int n = static_cast<int>(L.dim());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const LieVector& v = L.bracket(i, j);
      if (v.is_zero()) continue;
      Json value = Json::object();
      for (const auto& [k, c] : v.terms()) value[L.name(k)] = c.to_string();
      brackets.push_back({{"x", L.name(i)}, {"y", L.name(j)}, {"value", value}});
    }
  }
  return {{"basis", basis}, {"brackets", brackets}};
}

inline SuperLieAlgebra algebra_from_json(const Json& doc) {
  try {
    std::vector<BasisElement> basis;
    for (const auto& b : doc.at("basis")) basis.push_back({b.at("name").get<std::string>(), b.at("parity").get<int>()});
    SuperLieAlgebra L(basis);
    for (const auto& entry : doc.at("brackets")) {
      LieVector v;
      for (const auto& [name, text] : entry.at("value").items()) v.add(L.index_of(name), parse_scalar(text.get<std::string>()));
      L.set_bracket(entry.at("x").get<std::string>(), entry.at("y").get<std::string>(), v);
    }
    return L;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed algebra document: ") + e.what());
  }
}

inline Json to_json(const Report& r) {
  return {{"theorem", r.theorem}, {"status", r.status()}, {"pairs_checked", r.pairs_checked}, {"cutoffs", r.cutoffs},
          {"errata", r.errata},   {"failures", r.failures}, {"notes", r.notes}};
}

/// Row-major entries in symbol text; rows and columns 0, 1 are even, 2, 3 odd.
template <class C>
Json to_json(const BlockSupermatrix<C>& m) {
  Json rows = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 4; ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return {{"blocks", {{"even", {0, 1}}, {"odd", {2, 3}}}}, {"entries", rows}};
}

}  // namespace superweyl
