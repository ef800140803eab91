#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "superweyl/errors.hpp"
#include "superweyl/scalar.hpp"

namespace superweyl {

/// Which family an odd generator belongs to.
enum class OddKind : std::uint8_t { xi, eta };

/// One odd generator xi_k or eta_k; `index` is zero-based.
struct OddGenerator {
  OddKind kind;
  int index;

  static OddGenerator xi(int one_based) { return {OddKind::xi, one_based - 1}; }
  static OddGenerator eta(int one_based) { return {OddKind::eta, one_based - 1}; }
};

/// Normal-ordered monomial xi_{a1}...xi_{ar} eta_{b1}...eta_{bs}, indices
/// increasing inside each block. Stored as two bitmasks.
struct GrassmannMonomial {
  std::uint16_t xi = 0;
  std::uint16_t eta = 0;

  int degree() const { return std::popcount(xi) + std::popcount(eta); }
  int parity() const { return degree() & 1; }
  bool is_unit() const { return xi == 0 && eta == 0; }
  bool has(OddGenerator g) const {
    return ((g.kind == OddKind::xi ? xi : eta) >> g.index) & 1U;
  }
  int max_index() const {
    std::uint16_t all = xi | eta;
    return all == 0 ? -1 : 15 - std::countl_zero(all);
  }

  friend auto operator<=>(const GrassmannMonomial&, const GrassmannMonomial&) = default;

  /// Text form `xi1*xi2*eta1`, or `1` for the unit.
  std::string to_string() const {
    if (is_unit()) return "1";
    std::string s;
    auto emit = [&](std::uint16_t mask, const char* name) {
      for (int k = 0; k < 16; ++k) {
        if ((mask >> k) & 1U) {
          if (!s.empty()) s += "*";
          s += name + std::to_string(k + 1);
        }
      }
    };
    emit(xi, "xi");
    emit(eta, "eta");
    return s;
  }
};

namespace detail {

inline int count_above(std::uint16_t mask, int index) { return std::popcount(static_cast<std::uint16_t>(mask >> (index + 1))); }
inline int count_below(std::uint16_t mask, int index) {
  return std::popcount(static_cast<std::uint16_t>(mask & ((1U << index) - 1U)));
}

using MonomialMap = std::map<GrassmannMonomial, Scalar>;

inline void accumulate(MonomialMap& out, const GrassmannMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

// m * g rewritten into normal order with eta_i xi_j = hbar delta_ij - xi_j eta_i.
inline void multiply_by_generator(const GrassmannMonomial& m, OddGenerator g, const Scalar& coeff,
                                  const Scalar& hbar, MonomialMap& out) {
  if (g.kind == OddKind::eta) {
    if ((m.eta >> g.index) & 1U) return;
    GrassmannMonomial r = m;
    r.eta |= static_cast<std::uint16_t>(1U << g.index);
    accumulate(out, r, count_above(m.eta, g.index) % 2 ? -coeff : coeff);
    return;
  }
  if (m.eta == 0) {
    if ((m.xi >> g.index) & 1U) return;
    GrassmannMonomial r = m;
    r.xi |= static_cast<std::uint16_t>(1U << g.index);
    accumulate(out, r, count_above(m.xi, g.index) % 2 ? -coeff : coeff);
    return;
  }
  // m = prefix * eta_last; eta_last xi_j = hbar [last == j] - xi_j eta_last.
  int last = 15 - std::countl_zero(m.eta);
  GrassmannMonomial prefix = m;
  prefix.eta &= static_cast<std::uint16_t>(~(1U << last));
  if (last == g.index && !hbar.is_zero()) accumulate(out, prefix, coeff * hbar);
  MonomialMap moved;
  multiply_by_generator(prefix, g, -coeff, hbar, moved);
  for (const auto& [pm, pc] : moved) multiply_by_generator(pm, OddGenerator{OddKind::eta, last}, pc, hbar, out);
}

inline std::vector<OddGenerator> generators_of(const GrassmannMonomial& m) {
  std::vector<OddGenerator> gens;
  for (int k = 0; k < 16; ++k) {
    if ((m.xi >> k) & 1U) gens.push_back({OddKind::xi, k});
  }
  for (int k = 0; k < 16; ++k) {
    if ((m.eta >> k) & 1U) gens.push_back({OddKind::eta, k});
  }
  return gens;
}

}  // namespace detail

/// Product of two normal-ordered monomials in Lambda_hbar(2N); hbar = 0 gives
/// the exterior algebra.
inline detail::MonomialMap multiply_monomials(const GrassmannMonomial& x, const GrassmannMonomial& y,
                                              const Scalar& hbar) {
  detail::MonomialMap current{{x, Scalar(1)}};
  for (const OddGenerator& g : detail::generators_of(y)) {
    detail::MonomialMap next;
    for (const auto& [m, c] : current) detail::multiply_by_generator(m, g, c, hbar, next);
    current = std::move(next);
  }
  return current;
}

/// Left derivative: anticommute the generator to the front, then strike it.
/// Returns the sign (+1/-1) and the remaining monomial, or sign 0.
inline std::pair<int, GrassmannMonomial> left_derivative(const GrassmannMonomial& m, OddGenerator g) {
  if (!m.has(g)) return {0, m};
  GrassmannMonomial r = m;
  int passed = 0;
  if (g.kind == OddKind::xi) {
    passed = detail::count_below(m.xi, g.index);
    r.xi &= static_cast<std::uint16_t>(~(1U << g.index));
  } else {
    passed = std::popcount(m.xi) + detail::count_below(m.eta, g.index);
    r.eta &= static_cast<std::uint16_t>(~(1U << g.index));
  }
  return {passed % 2 ? -1 : 1, r};
}

/// Element of Lambda_h(2N): finite combination of normal-ordered monomials.
class GrassmannElement {
 public:
  using Terms = detail::MonomialMap;

  explicit GrassmannElement(int n = 2) : n_(n) {}
  GrassmannElement(int n, Terms terms) : n_(n), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      check_range(it->first);
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
  }

  static GrassmannElement constant(int n, const Scalar& c) { return GrassmannElement(n, {{GrassmannMonomial{}, c}}); }
  static GrassmannElement generator(int n, OddGenerator g) {
    GrassmannMonomial m;
    (g.kind == OddKind::xi ? m.xi : m.eta) = static_cast<std::uint16_t>(1U << g.index);
    return GrassmannElement(n, {{m, Scalar(1)}});
  }
  static GrassmannElement xi(int n, int k) { return generator(n, OddGenerator::xi(k)); }
  static GrassmannElement eta(int n, int k) { return generator(n, OddGenerator::eta(k)); }

  int rank() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// 0 or 1 for homogeneous elements, -1 when mixed. Zero counts as even.
  int parity() const {
    int p = -2;
    for (const auto& [m, c] : terms_) {
      if (p == -2) p = m.parity();
      else if (p != m.parity()) return -1;
    }
    return p == -2 ? 0 : p;
  }

  Scalar coefficient(const GrassmannMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
  }

  GrassmannElement operator-() const {
    GrassmannElement out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }
  GrassmannElement& operator+=(const GrassmannElement& o) {
    for (const auto& [m, c] : o.terms_) detail::accumulate(terms_, m, c);
    return *this;
  }
  GrassmannElement& operator-=(const GrassmannElement& o) { return *this += -o; }
  GrassmannElement& operator*=(const Scalar& k) {
    if (k.is_zero()) terms_.clear();
    for (auto& [m, c] : terms_) c *= k;
    return *this;
  }
  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(GrassmannElement a, const Scalar& k) { return a *= k; }
  friend GrassmannElement operator*(const Scalar& k, GrassmannElement a) { return a *= k; }

  friend bool operator==(const GrassmannElement& x, const GrassmannElement& y) {
    if (x.terms_.size() != y.terms_.size()) return false;
    for (const auto& [m, c] : x.terms_) {
      if (y.coefficient(m) != c) return false;
    }
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")";
      if (!m.is_unit()) s += "*" + m.to_string();
    }
    return s;
  }

 private:
  void check_range(const GrassmannMonomial& m) const {
    if (m.max_index() >= n_) {
      throw IndexOutOfRange("Grassmann monomial " + m.to_string() + " exceeds N = " + std::to_string(n_));
    }
  }

  int n_;
  Terms terms_;
};

/// Product in Lambda_hbar(2N).
inline GrassmannElement grassmann_mul(const GrassmannElement& x, const GrassmannElement& y, const Scalar& hbar) {
  if (x.rank() != y.rank()) throw IndexOutOfRange("Grassmann rank mismatch");
  GrassmannElement::Terms out;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      Scalar c = cx * cy;
      for (const auto& [m, k] : multiply_monomials(mx, my, hbar)) detail::accumulate(out, m, c * k);
    }
  }
  return GrassmannElement(x.rank(), std::move(out));
}

/// Left odd derivative with respect to xi_k or eta_k.
inline GrassmannElement odd_derivative(const GrassmannElement& x, OddGenerator g) {
  if (g.index < 0 || g.index >= x.rank()) throw IndexOutOfRange("derivative variable out of range");
  GrassmannElement::Terms out;
  for (const auto& [m, c] : x.terms()) {
    auto [sign, rest] = left_derivative(m, g);
    if (sign != 0) detail::accumulate(out, rest, sign > 0 ? c : -c);
  }
  return GrassmannElement(x.rank(), std::move(out));
}

}  // namespace superweyl
