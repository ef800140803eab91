#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "superweyl/scalar.hpp"

namespace superweyl {

/// Sparse Laurent polynomial in t with Scalar coefficients.
class LaurentPoly {
 public:
  using Terms = std::map<int, Scalar>;

  LaurentPoly() = default;
  LaurentPoly(const Scalar& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(0, c);
  }
  static LaurentPoly monomial(const Scalar& c, int exponent) {
    LaurentPoly out;
    if (!c.is_zero()) out.terms_.emplace(exponent, c);
    return out;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

  Scalar coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Scalar() : it->second;
  }

  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const Scalar& k) {
    if (k.is_zero()) terms_.clear();
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Scalar& k) { return a *= k; }
  friend LaurentPoly operator*(const Scalar& k, LaurentPoly a) { return a *= k; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
  }

  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
    if (x.terms_.size() != y.terms_.size()) return false;
    auto it = y.terms_.begin();
    for (const auto& [e, c] : x.terms_) {
      if (it->first != e || it->second != c) return false;
      ++it;
    }
    return true;
  }
  friend bool operator!=(const LaurentPoly& x, const LaurentPoly& y) { return !(x == y); }

  /// d/dt.
  LaurentPoly derivative() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
      if (e != 0) out.terms_.emplace(e - 1, c * Scalar(e));
    }
    return out;
  }

  LaurentPoly map_coefficients(const auto& f) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  void add_term(int e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  Terms terms_;
};

/// Pseudodifferential symbol sum_{i <= n} a_i(t) tau^i, truncated below.
///
/// `cutoff` is the lowest tau-degree represented. An exact symbol is a finite
/// sum held in full; an inexact one is correct on every degree >= cutoff and
/// unknown below it.
class Symbol {
 public:
  using Terms = std::map<int, LaurentPoly>;

  static constexpr int kDefaultCutoff = -8;
  static constexpr int kNoTop = INT_MIN / 4;

  explicit Symbol(int cutoff = kDefaultCutoff) : cutoff_(cutoff) {}

  /// c * t^t_exp * tau^tau_exp. Lowers the cutoff if needed to hold the term.
  static Symbol monomial(const Scalar& c, int t_exp, int tau_exp, int cutoff = kDefaultCutoff) {
    Symbol out(std::min(cutoff, tau_exp));
    out.add(tau_exp, LaurentPoly::monomial(c, t_exp));
    return out;
  }
  static Symbol constant(const Scalar& c, int cutoff = kDefaultCutoff) { return monomial(c, 0, 0, cutoff); }
  static Symbol t(int power = 1, int cutoff = kDefaultCutoff) { return monomial(Scalar(1), power, 0, cutoff); }
  static Symbol tau(int power = 1, int cutoff = kDefaultCutoff) { return monomial(Scalar(1), 0, power, cutoff); }

  /// Build from terms; degrees below the cutoff are dropped and make the symbol inexact.
  static Symbol from_terms(Terms terms, int cutoff, bool exact = true) {
    Symbol out(cutoff);
    out.exact_ = exact;
    for (auto& [d, p] : terms) {
      if (p.is_zero()) continue;
      if (d < cutoff) {
        out.exact_ = false;
        continue;
      }
      out.terms_.emplace(d, std::move(p));
    }
    return out;
  }

  int cutoff() const { return cutoff_; }
  bool exact() const { return exact_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_known_zero() const { return terms_.empty() && exact_; }

  std::optional<int> tau_max() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  /// Highest degree the full (possibly unknown) series can reach.
  int effective_top() const {
    if (!terms_.empty()) return terms_.rbegin()->first;
    return exact_ ? kNoTop : cutoff_ - 1;
  }

  /// Degrees at or above this value are known exactly.
  int valid_from() const { return exact_ ? kNoTop : cutoff_; }

  /// Membership in the differential subalgebra P^+.
  bool is_differential() const {
    return exact_ && (terms_.empty() || terms_.begin()->first >= 0);
  }
  bool has_polynomial_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_polynomial(); });
  }

  LaurentPoly coefficient(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? LaurentPoly() : it->second;
  }

  /// Same series with a different truncation level. Raising it on an exact
  /// symbol that has terms below the new level makes it inexact.
  Symbol with_cutoff(int cutoff) const {
    Symbol out(exact_ ? cutoff : std::max(cutoff, cutoff_));
    out.exact_ = exact_;
    for (const auto& [d, p] : terms_) out.add(d, p);
    return out;
  }

  Symbol operator-() const {
    Symbol out = *this;
    for (auto& [d, p] : out.terms_) p = -p;
    return out;
  }

  Symbol& operator+=(const Symbol& o) { return *this = combine(*this, o, false); }
  Symbol& operator-=(const Symbol& o) { return *this = combine(*this, o, true); }
  friend Symbol operator+(const Symbol& a, const Symbol& b) { return combine(a, b, false); }
  friend Symbol operator-(const Symbol& a, const Symbol& b) { return combine(a, b, true); }

  Symbol& operator*=(const Scalar& k) {
    if (k.is_zero()) terms_.clear();
    for (auto& [d, p] : terms_) p *= k;
    return *this;
  }
  friend Symbol operator*(Symbol a, const Scalar& k) { return a *= k; }
  friend Symbol operator*(const Scalar& k, Symbol a) { return a *= k; }

  /// d/dt.
  Symbol derivative_t() const {
    Symbol out(cutoff_);
    out.exact_ = exact_;
    for (const auto& [d, p] : terms_) out.add(d, p.derivative());
    return out;
  }

  /// d/dtau.
  Symbol derivative_tau() const {
    int lowest = terms_.empty() ? cutoff_ : std::min(cutoff_, terms_.begin()->first - 1);
    Symbol out(exact_ ? lowest : cutoff_ - 1);
    out.exact_ = exact_;
    for (const auto& [d, p] : terms_) {
      if (d != 0) out.add(d - 1, p * Scalar(d));
    }
    return out;
  }

  Symbol map_coefficients(const auto& f) const {
    Symbol out(cutoff_);
    out.exact_ = exact_;
    for (const auto& [d, p] : terms_) out.add(d, p.map_coefficients(f));
    return out;
  }

  Symbol substitute(Param p, const GaussianRational& v) const {
    return map_coefficients([&](const Scalar& c) { return c.substitute(p, v); });
  }
  Symbol substitute(const Assignment& at) const {
    return map_coefficients([&](const Scalar& c) { return superweyl::substitute(c, at); });
  }
  Symbol divided_by_param(Param p) const {
    return map_coefficients([&](const Scalar& c) { return c.divided_by_param(p); });
  }

  /// Equality on the degrees where both sides are known.
  friend bool agrees(const Symbol& x, const Symbol& y) {
    int from = std::max(x.valid_from(), y.valid_from());
    auto ix = x.terms_.lower_bound(from);
    auto iy = y.terms_.lower_bound(from);
    while (ix != x.terms_.end() || iy != y.terms_.end()) {
      if (ix == x.terms_.end() || (iy != y.terms_.end() && iy->first < ix->first)) return false;
      if (iy == y.terms_.end() || ix->first < iy->first) return false;
      if (ix->second != iy->second) return false;
      ++ix;
      ++iy;
    }
    return true;
  }

  /// Structural equality, including cutoff and exactness.
  friend bool operator==(const Symbol& x, const Symbol& y) {
    return x.cutoff_ == y.cutoff_ && x.exact_ == y.exact_ && agrees(x, y);
  }

  /// Text form `t^2*tau^-1 + (1/2)*t`, highest tau-degree first; inexact
  /// symbols end with `+ O(tau^(cutoff-1))`, the first dropped degree.
  std::string to_string() const {
    std::string out;
    append_terms(out, "");
    if (out.empty()) out = "0";
    if (!exact_) out += " + O(tau^" + std::to_string(cutoff_ - 1) + ")";
    return out;
  }

  /// Appends each term c*t^e*tau^d*suffix to `out`, with signs folded into the joins.
  void append_terms(std::string& out, const std::string& suffix) const {
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [d, p] = *it;
      for (auto jt = p.terms().rbegin(); jt != p.terms().rend(); ++jt) {
        const auto& [e, c] = *jt;
        std::string mono;
        if (e != 0) mono = e == 1 ? "t" : "t^" + std::to_string(e);
        if (d != 0) {
          if (!mono.empty()) mono += "*";
          mono += d == 1 ? "tau" : "tau^" + std::to_string(d);
        }
        if (!suffix.empty()) mono += mono.empty() ? suffix : "*" + suffix;
        append_signed_term(out, c, mono);
      }
    }
  }

  static void append_signed_term(std::string& out, const Scalar& c, const std::string& mono) {
    std::string coeff = c.to_string();
    bool negative = false;
    if (coeff.front() == '-' && coeff.find_first_of("+-", 1) == std::string::npos && coeff.find('(') == std::string::npos) {
      negative = true;
      coeff = coeff.substr(1);
    }
    bool simple = coeff.find_first_of("+-/ ") == std::string::npos;
    std::string term;
    if (mono.empty()) term = simple ? coeff : "(" + coeff + ")";
    else if (coeff == "1") term = mono;
    else term = (simple ? coeff : "(" + coeff + ")") + "*" + mono;
    if (out.empty()) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
  }

  // Accumulate p * tau^degree; used by the product kernels.
  void add(int degree, const LaurentPoly& p) {
    if (p.is_zero()) return;
    if (degree < cutoff_) {
      exact_ = false;
      return;
    }
    auto [it, inserted] = terms_.try_emplace(degree, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void mark_inexact() { exact_ = false; }

 private:
  static Symbol combine(const Symbol& a, const Symbol& b, bool subtract) {
    Symbol out;
    if (a.exact_ && b.exact_) {
      out.cutoff_ = std::min(a.cutoff_, b.cutoff_);
    } else {
      out.cutoff_ = std::max(a.valid_from(), b.valid_from());
      out.exact_ = false;
    }
    for (const auto& [d, p] : a.terms_) {
      if (d >= out.cutoff_) out.terms_.emplace(d, p);
    }
    for (const auto& [d, p] : b.terms_) {
      if (d < out.cutoff_) continue;
      out.add(d, subtract ? -p : p);
    }
    return out;
  }

  int cutoff_;
  bool exact_ = true;
  Terms terms_;
};

/// Validity floor and truncation level shared by the bilinear products.
inline int product_floor(const Symbol& a, const Symbol& b) {
  int floor = std::min(a.cutoff(), b.cutoff());
  if (!a.exact()) floor = std::max(floor, a.cutoff() + b.effective_top());
  if (!b.exact()) floor = std::max(floor, b.cutoff() + a.effective_top());
  if (!a.exact() && !b.exact()) floor = std::max(floor, a.cutoff() + b.cutoff());
  return floor;
}

/// Pointwise (commutative) product of symbols.
inline Symbol commutative_product(const Symbol& a, const Symbol& b) {
  if (a.is_known_zero() || b.is_known_zero()) return Symbol(std::min(a.cutoff(), b.cutoff()));
  Symbol out(product_floor(a, b));
  if (!a.exact() || !b.exact()) out.mark_inexact();
  for (const auto& [i, p] : a.terms()) {
    for (const auto& [j, q] : b.terms()) out.add(i + j, p * q);
  }
  return out;
}

/// {A, B} = dA/dtau dB/dt - dA/dt dB/dtau.
inline Symbol poisson_bracket(const Symbol& a, const Symbol& b) {
  return commutative_product(a.derivative_tau(), b.derivative_t()) -
         commutative_product(a.derivative_t(), b.derivative_tau());
}

/// A o_hbar B = sum_{n >= 0} hbar^n / n! (d/dtau)^n A (d/dt)^n B.
inline Symbol circ(const Symbol& a, const Symbol& b, const Scalar& hbar) {
  if (a.is_known_zero() || b.is_known_zero()) return Symbol(std::min(a.cutoff(), b.cutoff()));
  Symbol out(product_floor(a, b));
  if (!a.exact() || !b.exact()) out.mark_inexact();
  const int floor = out.cutoff();
  for (const auto& [i, p] : a.terms()) {
    for (const auto& [j, q] : b.terms()) {
      // weight = falling(i, n) * hbar^n / n!
      Scalar weight(1);
      LaurentPoly dq = q;
      for (int n = 0;; ++n) {
        if (n > 0) {
          weight *= Scalar(i - n + 1) * hbar * Scalar::rational(1, n);
          dq = dq.derivative();
        }
        if (weight.is_zero() || dq.is_zero()) break;
        const int degree = i + j - n;
        if (degree < floor) {
          out.mark_inexact();
          break;
        }
        out.add(degree, (p * dq) * weight);
      }
    }
  }
  return out;
}

/// [A, B]_h = (A o_h B - B o_h A) / h with h the formal parameter.
inline Symbol lie_bracket_h(const Symbol& a, const Symbol& b) {
  const Scalar h = Scalar::param(Param::h);
  return (circ(a, b, h) - circ(b, a, h)).divided_by_param(Param::h);
}

}  // namespace superweyl
