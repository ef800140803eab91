#pragma once

#include <string>
#include <vector>

#include "superweyl/superlie.hpp"

namespace superweyl {

/// Outcome of one verification run.
struct Report {
  std::string theorem;
  std::size_t pairs_checked = 0;
  std::vector<int> cutoffs;
  std::vector<std::string> errata;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
  std::string status() const { return passed() ? "pass" : "fail"; }

  void fail(std::string what) { failures.push_back(std::move(what)); }
  void merge(const Report& other, const std::string& prefix = "") {
    pairs_checked += other.pairs_checked;
    for (const auto& e : other.errata) errata.push_back(prefix + e);
    for (const auto& f : other.failures) failures.push_back(prefix + f);
    for (const auto& n : other.notes) notes.push_back(prefix + n);
  }

  /// Records a homomorphism check, naming source basis elements.
  void absorb(const HomomorphismResult& r, const SuperLieAlgebra& src, const std::string& label) {
    pairs_checked += r.pairs_checked;
    for (const auto& f : r.failures) {
      failures.push_back(label + ": [" + src.name(f.x) + ", " + src.name(f.y) + "] gives " + f.lhs + " but expected " + f.rhs);
    }
  }
};

}  // namespace superweyl
