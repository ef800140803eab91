#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "superweyl/errors.hpp"
#include "superweyl/rational.hpp"

namespace superweyl {

/// The closed set of formal parameters. Adding one is a code change.
enum class Param : std::uint8_t { alpha, h, a, b, lambda, sigma1, sigma2, sigma3 };

inline constexpr std::size_t kParamCount = 8;

inline constexpr std::array<std::string_view, kParamCount> kParamNames{
    "alpha", "h", "a", "b", "lambda", "sigma1", "sigma2", "sigma3"};

inline constexpr std::string_view param_name(Param p) { return kParamNames[static_cast<std::size_t>(p)]; }

inline std::optional<Param> param_from_name(std::string_view name) {
  for (std::size_t k = 0; k < kParamCount; ++k) {
    if (kParamNames[k] == name) return static_cast<Param>(k);
  }
  return std::nullopt;
}

/// Only lambda may carry negative exponents.
inline constexpr bool allows_negative_exponent(Param p) { return p == Param::lambda; }

using Exponents = std::array<std::int16_t, kParamCount>;

/// Map from parameter to an exact value, used for specialization.
using Assignment = std::map<Param, GaussianRational>;

/// Sparse polynomial in the formal parameters with Gaussian-rational
/// coefficients (Laurent in lambda). Terms are keyed by exponent vectors in
/// lexicographic order; no zero coefficient is ever stored.
class ParamPoly {
 public:
  using Terms = std::map<Exponents, GaussianRational>;

  ParamPoly() = default;
  ParamPoly(GaussianRational c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(Exponents{}, std::move(c));
  }
  ParamPoly(long c) : ParamPoly(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)

  static ParamPoly variable(Param p, int power = 1) {
    Exponents e{};
    e[static_cast<std::size_t>(p)] = static_cast<std::int16_t>(power);
    return monomial(GaussianRational(1), e);
  }

  static ParamPoly monomial(GaussianRational c, const Exponents& e) {
    ParamPoly out;
    if (!c.is_zero()) out.terms_.emplace(e, std::move(c));
    return out;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
  }
  GaussianRational constant_term() const {
    auto it = terms_.find(Exponents{});
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  /// Leading term under lexicographic order (largest exponent vector).
  const std::pair<const Exponents, GaussianRational>& leading() const { return *terms_.rbegin(); }

  int max_degree(Param p) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      int v = e[static_cast<std::size_t>(p)];
      d = first ? v : std::max(d, v);
      first = false;
    }
    return d;
  }
  int min_degree(Param p) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      int v = e[static_cast<std::size_t>(p)];
      d = first ? v : std::min(d, v);
      first = false;
    }
    return d;
  }
  bool involves(Param p) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [p](const auto& t) { return t.first[static_cast<std::size_t>(p)] != 0; });
  }

  ParamPoly operator-() const {
    ParamPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  ParamPoly& operator+=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  ParamPoly& operator-=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  ParamPoly& operator*=(const GaussianRational& k) {
    if (k.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(ParamPoly a, const GaussianRational& k) { return a *= k; }

  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
    }
    return out;
  }
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  ParamPoly pow(unsigned n) const {
    ParamPoly out(1);
    ParamPoly base = *this;
    while (n != 0) {
      if (n & 1U) out *= base;
      n >>= 1U;
      if (n != 0) base *= base;
    }
    return out;
  }

  /// Multiply by p^shift (shift may be negative only for Laurent parameters).
  ParamPoly shifted(Param p, int shift) const {
    ParamPoly out;
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      f[static_cast<std::size_t>(p)] = static_cast<std::int16_t>(f[static_cast<std::size_t>(p)] + shift);
      out.terms_.emplace(f, c);
    }
    return out;
  }

  /// Substitute a constant for one parameter.
  ParamPoly substitute(Param p, const GaussianRational& value) const {
    ParamPoly out;
    const auto k = static_cast<std::size_t>(p);
    for (const auto& [e, c] : terms_) {
      int n = e[k];
      if (n < 0 && value.is_zero()) throw PoleAtPoint(std::string("negative power of ") + std::string(param_name(p)) + " at 0");
      Exponents f = e;
      f[k] = 0;
      out.add_term(f, c * power_of(value, n));
    }
    return out;
  }

  /// Substitute a polynomial for one parameter (no negative powers of p).
  ParamPoly substitute(Param p, const ParamPoly& value) const {
    const auto k = static_cast<std::size_t>(p);
    ParamPoly out;
    std::map<int, ParamPoly> by_power;
    for (const auto& [e, c] : terms_) {
      if (e[k] < 0) throw AlgebraError("polynomial substitution into a negative power");
      Exponents f = e;
      f[k] = 0;
      by_power[e[k]].add_term(f, c);
    }
    for (const auto& [n, coeff] : by_power) out += coeff * value.pow(static_cast<unsigned>(n));
    return out;
  }

  /// Evaluate with every occurring parameter assigned.
  GaussianRational evaluate(const Assignment& at) const {
    GaussianRational sum;
    for (const auto& [e, c] : terms_) {
      GaussianRational term = c;
      for (std::size_t k = 0; k < kParamCount; ++k) {
        if (e[k] == 0) continue;
        auto it = at.find(static_cast<Param>(k));
        if (it == at.end()) {
          throw AlgebraError("parameter " + std::string(kParamNames[k]) + " is not assigned");
        }
        if (e[k] < 0 && it->second.is_zero()) throw PoleAtPoint("negative power at zero");
        term *= power_of(it->second, e[k]);
      }
      sum += term;
    }
    return sum;
  }

  /// Exact quotient this / divisor if the division leaves no remainder.
  std::optional<ParamPoly> exact_divide(const ParamPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (is_zero()) return ParamPoly();
    // Clear negative lambda powers so lexicographic division terminates.
    int shift_num = std::max(0, -min_degree(Param::lambda));
    int shift_den = std::max(0, -divisor.min_degree(Param::lambda));
    ParamPoly rem = shifted(Param::lambda, shift_num);
    ParamPoly den = divisor.shifted(Param::lambda, shift_den);
    const auto& [lead_e, lead_c] = den.leading();
    GaussianRational lead_inv = lead_c.inverse();
    ParamPoly quotient;
    while (!rem.is_zero()) {
      const auto& [re, rc] = rem.leading();
      Exponents q{};
      for (std::size_t k = 0; k < kParamCount; ++k) {
        int d = re[k] - lead_e[k];
        if (d < 0) return std::nullopt;
        q[k] = static_cast<std::int16_t>(d);
      }
      ParamPoly t = monomial(rc * lead_inv, q);
      quotient += t;
      rem -= t * den;
    }
    return quotient.shifted(Param::lambda, shift_den - shift_num);
  }

  /// Divide by (p - root) treating the other parameters as coefficients.
  /// Returns nullopt when the remainder is nonzero.
  std::optional<ParamPoly> divide_by_linear(Param p, const GaussianRational& root) const {
    // Synthetic division on the p-degree layers, top-down.
    const auto k = static_cast<std::size_t>(p);
    if (min_degree(p) < 0) throw AlgebraError("linear division requires a polynomial in the parameter");
    std::map<int, ParamPoly, std::greater<>> layers;
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      f[k] = 0;
      layers[e[k]].add_term(f, c);
    }
    if (layers.empty()) return ParamPoly();
    int top = layers.begin()->first;
    ParamPoly carry;
    ParamPoly quotient;
    for (int n = top; n >= 0; --n) {
      ParamPoly coeff = carry;
      if (auto it = layers.find(n); it != layers.end()) coeff += it->second;
      if (n == 0) {
        if (!coeff.is_zero()) return std::nullopt;
        break;
      }
      quotient += coeff.shifted(p, n - 1);
      carry = coeff * root;
    }
    return quotient;
  }

  std::string to_string() const;

 private:
  friend class Scalar;

  static Exponents add_exponents(const Exponents& a, const Exponents& b) {
    Exponents out{};
    for (std::size_t k = 0; k < kParamCount; ++k) out[k] = static_cast<std::int16_t>(a[k] + b[k]);
    return out;
  }

  static GaussianRational power_of(const GaussianRational& v, int n) {
    GaussianRational base = n < 0 ? v.inverse() : v;
    GaussianRational out(1);
    for (int j = 0; j < (n < 0 ? -n : n); ++j) out *= base;
    return out;
  }

  void add_term(const Exponents& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Terms terms_;
};

inline std::string monomial_string(const Exponents& e) {
  std::string s;
  for (std::size_t k = 0; k < kParamCount; ++k) {
    if (e[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += kParamNames[k];
    if (e[k] != 1) s += "^" + std::to_string(e[k]);
  }
  return s;
}

inline std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest lexicographic term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_string(e);
    std::string coeff;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      Rational mag = abs(c.re());
      if (mono.empty() || mag != 1) coeff = mag.get_str();
    } else {
      coeff = c.to_string();
      if (coeff.front() == '-') {
        negative = true;
        coeff = coeff.substr(1);
      }
    }
    std::string term;
    if (coeff.empty()) {
      term = mono;
    } else if (mono.empty()) {
      term = coeff;
    } else if (coeff.find('/') != std::string::npos && coeff.front() != '(') {
      term = "(" + coeff + ")*" + mono;
    } else {
      term = coeff + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

}  // namespace superweyl
