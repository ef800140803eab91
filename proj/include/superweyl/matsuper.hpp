#pragma once

#include <array>
#include <string>
#include <type_traits>

#include "superweyl/errors.hpp"
#include "superweyl/scalar.hpp"
#include "superweyl/sl22.hpp"
#include "superweyl/symbol.hpp"

namespace superweyl {

/// Element of W~ = P_{h=1}: a pseudodifferential symbol with tau read as d and
/// the product o_1. Elements of degree >= 0 held exactly form the Weyl algebra W.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(Symbol s) : s_(std::move(s)) {}          // NOLINT(google-explicit-constructor)
  WeylElement(const Scalar& c) : s_(Symbol::constant(c)) {  // NOLINT(google-explicit-constructor)
    if (c.is_zero()) s_ = Symbol();
  }
  WeylElement(long c) : WeylElement(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  static WeylElement t(int power = 1, int cutoff = Symbol::kDefaultCutoff) { return Symbol::t(power, cutoff); }
  static WeylElement d(int power = 1, int cutoff = Symbol::kDefaultCutoff) { return Symbol::tau(power, cutoff); }

  const Symbol& symbol() const { return s_; }
  bool is_zero() const { return s_.is_zero(); }
  bool is_known_zero() const { return s_.is_known_zero(); }
  /// Membership in W: exact with only nonnegative powers of d.
  bool in_weyl_algebra() const { return s_.is_differential(); }

  WeylElement with_cutoff(int cutoff) const { return s_.with_cutoff(cutoff); }

  WeylElement operator-() const { return -s_; }
  friend WeylElement operator+(const WeylElement& a, const WeylElement& b) { return a.s_ + b.s_; }
  friend WeylElement operator-(const WeylElement& a, const WeylElement& b) { return a.s_ - b.s_; }
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) { return circ(a.s_, b.s_, Scalar(1)); }
  friend WeylElement operator*(const WeylElement& a, const Scalar& k) { return a.s_ * k; }
  friend WeylElement operator*(const Scalar& k, const WeylElement& a) { return a.s_ * k; }
  WeylElement& operator+=(const WeylElement& o) { return *this = *this + o; }
  WeylElement& operator-=(const WeylElement& o) { return *this = *this - o; }

  /// Equality on the degrees both sides know.
  friend bool agrees(const WeylElement& a, const WeylElement& b) { return agrees(a.s_, b.s_); }
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return agrees(a, b); }

  WeylElement substitute(const Assignment& at) const { return s_.substitute(at); }

  std::string to_string() const { return s_.to_string(); }

 private:
  Symbol s_;
};

namespace matsuper_detail {

template <class C>
bool coefficient_is_zero(const C& c) {
  if constexpr (std::is_same_v<C, WeylElement>) return c.is_known_zero();
  else return c.is_zero();
}

template <class C>
bool coefficient_may_be_nonzero(const C& c) {
  return !c.is_zero();
}

template <class C>
bool coefficient_equal(const C& a, const C& b) {
  if constexpr (std::is_same_v<C, WeylElement>) return agrees(a, b);
  else return a == b;
}

template <class C>
std::string coefficient_string(const C& c) {
  return c.to_string();
}

}  // namespace matsuper_detail

/// (2|2) block matrix: rows and columns 0,1 are even, 2,3 odd. Coefficients are even.
template <class C>
class BlockSupermatrix {
 public:
  using Entries = std::array<std::array<C, 4>, 4>;

  BlockSupermatrix() = default;
  explicit BlockSupermatrix(Entries e) : e_(std::move(e)) {}

  static BlockSupermatrix identity() {
    BlockSupermatrix m;
    for (std::size_t k = 0; k < 4; ++k) m.e_[k][k] = C(1);
    return m;
  }
  static BlockSupermatrix scalar_identity(const C& c) {
    BlockSupermatrix m;
    for (std::size_t k = 0; k < 4; ++k) m.e_[k][k] = c;
    return m;
  }
  static BlockSupermatrix unit(int row, int col, const C& c) {
    BlockSupermatrix m;
    m.e_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = c;
    return m;
  }
  /// Scalar matrix promoted to this coefficient type.
  static BlockSupermatrix from_scalar(const Mat4& m) {
    BlockSupermatrix out;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        if (!m[i][j].is_zero()) out.e_[i][j] = C(m[i][j]);
      }
    }
    return out;
  }

  static int block(std::size_t k) { return k < 2 ? 0 : 1; }

  const C& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  C& operator()(int i, int j) { return e_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const Entries& entries() const { return e_; }

  bool is_zero() const {
    for (const auto& row : e_) {
      for (const auto& c : row) {
        if (matsuper_detail::coefficient_may_be_nonzero(c)) return false;
      }
    }
    return true;
  }

  /// 0 or 1 when homogeneous, -1 when mixed. Zero is even.
  int parity() const {
    int p = -2;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        if (!matsuper_detail::coefficient_may_be_nonzero(e_[i][j])) continue;
        const int q = (block(i) + block(j)) % 2;
        if (p == -2) p = q;
        else if (p != q) return -1;
      }
    }
    return p == -2 ? 0 : p;
  }

  BlockSupermatrix operator-() const {
    BlockSupermatrix out = *this;
    for (auto& row : out.e_) {
      for (auto& c : row) c = -c;
    }
    return out;
  }
  friend BlockSupermatrix operator+(const BlockSupermatrix& a, const BlockSupermatrix& b) {
    BlockSupermatrix out;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) out.e_[i][j] = a.e_[i][j] + b.e_[i][j];
    }
    return out;
  }
  friend BlockSupermatrix operator-(const BlockSupermatrix& a, const BlockSupermatrix& b) { return a + (-b); }
  friend BlockSupermatrix operator*(const BlockSupermatrix& a, const Scalar& k) {
    BlockSupermatrix out = a;
    for (auto& row : out.e_) {
      for (auto& c : row) c = c * k;
    }
    return out;
  }
  friend BlockSupermatrix operator*(const Scalar& k, const BlockSupermatrix& a) { return a * k; }

  /// Matrix product with entries composed in the coefficient algebra.
  friend BlockSupermatrix operator*(const BlockSupermatrix& a, const BlockSupermatrix& b) {
    BlockSupermatrix out;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        C sum = C();
        for (std::size_t l = 0; l < 4; ++l) {
          if (matsuper_detail::coefficient_is_zero(a.e_[i][l]) || matsuper_detail::coefficient_is_zero(b.e_[l][j])) continue;
          sum = sum + a.e_[i][l] * b.e_[l][j];
        }
        out.e_[i][j] = sum;
      }
    }
    return out;
  }

  friend bool operator==(const BlockSupermatrix& a, const BlockSupermatrix& b) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        if (!matsuper_detail::coefficient_equal(a.e_[i][j], b.e_[i][j])) return false;
      }
    }
    return true;
  }

  BlockSupermatrix map_entries(const auto& f) const {
    BlockSupermatrix out;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) out.e_[i][j] = f(e_[i][j]);
    }
    return out;
  }

  /// Row-major text, one row per line with entries separated by " | " at the block border.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i == 2) out += "------\n";
      for (std::size_t j = 0; j < 4; ++j) {
        if (j == 2) out += " |";
        out += (j == 0 ? "" : " ") + std::string("[") + matsuper_detail::coefficient_string(e_[i][j]) + "]";
      }
      out += "\n";
    }
    return out;
  }

 private:
  Entries e_{};
};

using ScalarSupermatrix = BlockSupermatrix<Scalar>;
using WeylSupermatrix = BlockSupermatrix<WeylElement>;

/// Graded commutator XY - (-1)^{p(X)p(Y)} YX.
template <class C>
BlockSupermatrix<C> supercommutator(const BlockSupermatrix<C>& x, const BlockSupermatrix<C>& y) {
  const int px = x.parity();
  const int py = y.parity();
  if (px < 0 || py < 0) throw MixedParity("supercommutator of a mixed-parity matrix");
  return (px == 1 && py == 1) ? x * y + y * x : x * y - y * x;
}

/// str = tr(even block) - tr(odd block); defined for commutative coefficients only.
template <class C>
Scalar supertrace(const BlockSupermatrix<C>& x) {
  if constexpr (std::is_same_v<C, Scalar>) {
    return x(0, 0) + x(1, 1) - x(2, 2) - x(3, 3);
  } else {
    throw NonCommutativeCoefficients("supertrace needs commutative coefficients");
  }
}

inline Mat4 to_mat4(const ScalarSupermatrix& m) {
  Mat4 out{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out[i][j] = m.entries()[i][j];
  }
  return out;
}

}  // namespace superweyl
