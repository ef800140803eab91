#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "superweyl/errors.hpp"
#include "superweyl/param_poly.hpp"
#include "superweyl/rational.hpp"

namespace superweyl {

/// Element of the fraction field of ParamPoly.
///
/// Fractions are not reduced by a multivariate gcd. Normalization only clears
/// constant and monomial denominators and cancels a denominator that divides
/// the numerator exactly; equality is decided by cross-multiplication.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long v) : num_(v), den_(1) {}                     // NOLINT(google-explicit-constructor)
  Scalar(GaussianRational v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(ParamPoly num) : num_(std::move(num)), den_(1) {}     // NOLINT(google-explicit-constructor)
  Scalar(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static Scalar rational(long num, long den) { return Scalar(GaussianRational(make_rational(num, den))); }
  static Scalar i() { return Scalar(GaussianRational::i()); }
  static Scalar param(Param p, int power = 1) { return Scalar(ParamPoly::variable(p, power)); }

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool involves(Param p) const { return num_.involves(p) || den_.involves(p); }

  /// Value as a Gaussian rational when no parameter occurs.
  GaussianRational constant_value() const {
    if (!is_constant()) throw AlgebraError("scalar " + to_string() + " is not constant");
    return num_.constant_term() / den_.constant_term();
  }

  Scalar operator-() const {
    Scalar out = *this;
    out.num_ = -out.num_;
    return out;
  }

  Scalar& operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
      num_ += o.num_;
      if (num_.is_zero()) den_ = ParamPoly(1);
      else if (!den_.is_constant()) normalize();
      return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  Scalar& operator-=(const Scalar& o) { return *this += -o; }

  Scalar& operator*=(const Scalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = Scalar();
    num_ *= o.num_;
    if (!o.den_.is_constant() || o.den_.constant_term() != GaussianRational(1)) {
      den_ *= o.den_;
      normalize();
    } else if (!den_.is_constant()) {
      normalize();
    }
    return *this;
  }

  Scalar inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    return Scalar(den_, num_);
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero scalar " + o.to_string());
    return *this *= o.inverse();
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    if (x.den_ == y.den_) return x.num_ == y.num_;
    return x.num_ * y.den_ == y.num_ * x.den_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  Scalar pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    return Scalar(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
  }

  /// Replace one parameter by a constant.
  Scalar substitute(Param p, const GaussianRational& value) const {
    if (!involves(p)) return *this;
    ParamPoly d = den_.substitute(p, value);
    if (d.is_zero()) {
      throw PoleAtPoint("denominator " + den_.to_string() + " vanishes at " + std::string(param_name(p)) + " = " +
                        value.to_string());
    }
    return Scalar(num_.substitute(p, value), std::move(d));
  }

  /// Replace one parameter by another scalar (a rational function).
  Scalar substitute(Param p, const Scalar& value) const {
    if (!involves(p)) return *this;
    if (value.is_constant()) return substitute(p, value.constant_value());
    int degree = std::max(num_.max_degree(p), den_.max_degree(p));
    auto homogenize = [&](const ParamPoly& poly) {
      const auto k = static_cast<std::size_t>(p);
      ParamPoly out;
      for (const auto& [e, c] : poly.terms()) {
        if (e[k] < 0) throw AlgebraError("rational substitution into a negative power");
        Exponents f = e;
        f[k] = 0;
        out += ParamPoly::monomial(c, f) * value.num_.pow(static_cast<unsigned>(e[k])) *
               value.den_.pow(static_cast<unsigned>(degree - e[k]));
      }
      return out;
    };
    ParamPoly d = homogenize(den_);
    if (d.is_zero()) throw PoleAtPoint("denominator vanishes after substitution of " + std::string(param_name(p)));
    return Scalar(homogenize(num_), std::move(d));
  }

  /// Exact division by a parameter; the numerator must carry the factor.
  Scalar divided_by_param(Param p) const {
    if (is_zero()) return *this;
    if (num_.min_degree(p) >= 1 || allows_negative_exponent(p)) {
      Scalar out = *this;
      out.num_ = num_.shifted(p, -1);
      return out;
    }
    throw NonDivisibleByH("numerator " + num_.to_string() + " is not divisible by " + std::string(param_name(p)));
  }

  std::string to_string() const {
    if (den_.is_constant() && den_.constant_term().is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  void normalize() {
    if (den_.is_zero()) throw DivisionByZero("scalar with zero denominator");
    if (num_.is_zero()) {
      den_ = ParamPoly(1);
      return;
    }
    if (den_.is_constant()) {
      GaussianRational c = den_.constant_term();
      if (!c.is_one()) num_ *= c.inverse();
      den_ = ParamPoly(1);
      return;
    }
    if (den_.size() == 1) {
      const auto& [e, c] = den_.leading();
      bool divides = true;
      for (const auto& [ne, nc] : num_.terms()) {
        for (std::size_t k = 0; k < kParamCount && divides; ++k) {
          if (!allows_negative_exponent(static_cast<Param>(k)) && ne[k] < e[k]) divides = false;
        }
        if (!divides) break;
      }
      if (divides) {
        ParamPoly q;
        GaussianRational inv = c.inverse();
        for (const auto& [ne, nc] : num_.terms()) {
          Exponents f{};
          for (std::size_t k = 0; k < kParamCount; ++k) f[k] = static_cast<std::int16_t>(ne[k] - e[k]);
          q += ParamPoly::monomial(nc * inv, f);
        }
        num_ = std::move(q);
        den_ = ParamPoly(1);
        return;
      }
    } else if (auto q = num_.exact_divide(den_)) {
      num_ = std::move(*q);
      den_ = ParamPoly(1);
      return;
    }
    GaussianRational lead = den_.leading().second;
    if (!lead.is_one()) {
      GaussianRational inv = lead.inverse();
      num_ *= inv;
      den_ *= inv;
    }
  }

  ParamPoly num_;
  ParamPoly den_;
};

/// Exact evaluation at a full assignment.
inline GaussianRational specialize(const Scalar& x, const Assignment& at) {
  GaussianRational d = x.den().evaluate(at);
  if (d.is_zero()) throw PoleAtPoint("denominator " + x.den().to_string() + " vanishes at the assignment");
  return x.num().evaluate(at) / d;
}

/// Partial evaluation: substitute the assigned parameters, leave the rest formal.
inline Scalar substitute(const Scalar& x, const Assignment& at) {
  Scalar out = x;
  for (const auto& [p, v] : at) out = out.substitute(p, v);
  return out;
}

/// Value at p = value of the fraction after cancelling the common power of
/// (p - value); the other parameters stay formal.
inline Scalar limit_at(const Scalar& x, Param p, const GaussianRational& value) {
  auto strip = [&](ParamPoly poly) {
    int multiplicity = 0;
    if (poly.is_zero()) return std::pair{poly, -1};
    while (auto q = poly.divide_by_linear(p, value)) {
      poly = std::move(*q);
      ++multiplicity;
    }
    return std::pair{poly, multiplicity};
  };
  if (x.is_zero()) return x;
  auto [num, num_mult] = strip(x.num());
  auto [den, den_mult] = strip(x.den());
  if (den_mult > num_mult) {
    throw EssentialPole("pole of order " + std::to_string(den_mult - num_mult) + " at " +
                        std::string(param_name(p)) + " = " + value.to_string() + " in " + x.to_string());
  }
  if (num_mult > den_mult) return Scalar();
  return Scalar(num.substitute(p, value), den.substitute(p, value));
}

}  // namespace superweyl
