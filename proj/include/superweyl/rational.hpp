#pragma once

#include <gmpxx.h>

#include <ostream>
#include <sstream>
#include <string>

#include "superweyl/errors.hpp"

namespace superweyl {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonicalizes after every operation).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Element of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = 0)  // NOLINT(google-explicit-constructor)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero Gaussian rational");
    Rational n = norm();
    return {re_ / n, -im_ / n};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (o.is_real()) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Text form used by the scalar printer: `3`, `-1/2`, `i`, `2*i/3`, `(1+2*i)`.
  std::string to_string() const {
    if (is_real()) return re_.get_str();
    std::string imag = imaginary_string();
    if (sgn(re_) == 0) return imag;
    std::string sep = imag.front() == '-' ? "" : "+";
    return "(" + re_.get_str() + sep + imag + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.to_string(); }

 private:
  std::string imaginary_string() const {
    Rational mag = abs(im_);
    std::string s = sgn(im_) < 0 ? "-" : "";
    if (mag.get_num() != 1) s += mag.get_num().get_str() + "*";
    s += "i";
    if (mag.get_den() != 1) s += "/" + mag.get_den().get_str();
    return s;
  }

  Rational re_{0};
  Rational im_{0};
};

}  // namespace superweyl
