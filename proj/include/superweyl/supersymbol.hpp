#pragma once

#include <map>
#include <string>
#include <utility>

#include "superweyl/errors.hpp"
#include "superweyl/grassmann.hpp"
#include "superweyl/symbol.hpp"

namespace superweyl {

/// Grassmann-valued pseudodifferential symbol: sum of Symbol (x) monomial.
///
/// Components that are known to be zero are never stored; an inexact zero
/// component is kept because it still carries its validity floor.
class SuperSymbol {
 public:
  using Terms = std::map<GrassmannMonomial, Symbol>;

  explicit SuperSymbol(int n = 2, int cutoff = Symbol::kDefaultCutoff) : n_(n), cutoff_(cutoff) {}

  static SuperSymbol from(const Symbol& s, const GrassmannMonomial& m, int n = 2) {
    SuperSymbol out(n, s.cutoff());
    out.add(m, s);
    return out;
  }
  static SuperSymbol even(const Symbol& s, int n = 2) { return from(s, GrassmannMonomial{}, n); }

  /// Symbol times a Grassmann element (any order of generators, already normal ordered).
  static SuperSymbol from(const Symbol& s, const GrassmannElement& g) {
    SuperSymbol out(g.rank(), s.cutoff());
    for (const auto& [m, c] : g.terms()) out.add(m, s * c);
    return out;
  }

  int rank() const { return n_; }
  int cutoff() const { return cutoff_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const {
    for (const auto& [m, s] : terms_) {
      if (!s.is_zero()) return false;
    }
    return true;
  }

  Symbol component(const GrassmannMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Symbol(cutoff_) : it->second;
  }

  /// 0 or 1 when homogeneous; -1 when mixed. Zero is even.
  int parity() const {
    int p = -2;
    for (const auto& [m, s] : terms_) {
      if (s.is_zero()) continue;
      if (p == -2) p = m.parity();
      else if (p != m.parity()) return -1;
    }
    return p == -2 ? 0 : p;
  }

  int homogeneous_parity(const char* what) const {
    int p = parity();
    if (p < 0) throw MixedParity(std::string(what) + ": argument has mixed parity");
    return p;
  }

  bool is_differential() const {
    for (const auto& [m, s] : terms_) {
      if (!s.is_differential()) return false;
    }
    return true;
  }

  void add(const GrassmannMonomial& m, const Symbol& s) {
    if (m.max_index() >= n_) throw IndexOutOfRange("monomial " + m.to_string() + " exceeds N");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!s.is_known_zero()) terms_.emplace(m, s);
      return;
    }
    it->second += s;
    if (it->second.is_known_zero()) terms_.erase(it);
  }

  SuperSymbol operator-() const {
    SuperSymbol out = *this;
    for (auto& [m, s] : out.terms_) s = -s;
    return out;
  }
  SuperSymbol& operator+=(const SuperSymbol& o) {
    for (const auto& [m, s] : o.terms_) add(m, s);
    return *this;
  }
  SuperSymbol& operator-=(const SuperSymbol& o) { return *this += -o; }
  SuperSymbol& operator*=(const Scalar& k) {
    for (auto& [m, s] : terms_) s *= k;
    if (k.is_zero()) std::erase_if(terms_, [](const auto& t) { return t.second.is_known_zero(); });
    return *this;
  }
  friend SuperSymbol operator+(SuperSymbol a, const SuperSymbol& b) { return a += b; }
  friend SuperSymbol operator-(SuperSymbol a, const SuperSymbol& b) { return a -= b; }
  friend SuperSymbol operator*(SuperSymbol a, const Scalar& k) { return a *= k; }
  friend SuperSymbol operator*(const Scalar& k, SuperSymbol a) { return a *= k; }

  SuperSymbol map_symbols(const auto& f) const {
    SuperSymbol out(n_, cutoff_);
    for (const auto& [m, s] : terms_) out.add(m, f(s));
    return out;
  }
  SuperSymbol substitute(Param p, const GaussianRational& v) const {
    return map_symbols([&](const Symbol& s) { return s.substitute(p, v); });
  }
  SuperSymbol substitute(const Assignment& at) const {
    return map_symbols([&](const Symbol& s) { return s.substitute(at); });
  }
  SuperSymbol with_cutoff(int cutoff) const {
    SuperSymbol out(n_, cutoff);
    for (const auto& [m, s] : terms_) out.add(m, s.with_cutoff(cutoff));
    return out;
  }

  /// Componentwise agreement on the degrees both sides know.
  friend bool agrees(const SuperSymbol& x, const SuperSymbol& y) {
    for (const auto& [m, s] : x.terms_) {
      if (!agrees(s, y.component(m))) return false;
    }
    for (const auto& [m, s] : y.terms_) {
      if (!x.terms_.contains(m) && !agrees(x.component(m), s)) return false;
    }
    return true;
  }

  /// Expanded text form `t*tau*xi1 - (1/2)*t^-1*xi1*xi2*eta2`.
  std::string to_string() const {
    std::string out;
    int floor = Symbol::kNoTop;
    for (const auto& [m, s] : terms_) {
      s.append_terms(out, m.is_unit() ? "" : m.to_string());
      if (!s.exact()) floor = std::max(floor, s.cutoff());
    }
    if (out.empty()) out = "0";
    if (floor != Symbol::kNoTop) out += " + O(tau^" + std::to_string(floor - 1) + ")";
    return out;
  }

 private:
  int n_;
  int cutoff_;
  Terms terms_;
};

namespace detail {

inline void accumulate_product(SuperSymbol& out, const Symbol& coeff, const detail::MonomialMap& grassmann) {
  for (const auto& [m, c] : grassmann) out.add(m, coeff * c);
}

}  // namespace detail

/// Super Poisson bracket on P(2N):
/// {A,B} = A_tau B_t - A_t B_tau + (-1)^{p(A)+1} sum_i (A_{xi_i} B_{eta_i} + A_{eta_i} B_{xi_i}),
/// with left odd derivatives.
inline SuperSymbol super_poisson(const SuperSymbol& a, const SuperSymbol& b) {
  const int pa = a.homogeneous_parity("super_poisson");
  const int n = a.rank();
  const Scalar zero;
  const Scalar sign = pa == 0 ? Scalar(-1) : Scalar(1);
  SuperSymbol out(n, std::min(a.cutoff(), b.cutoff()));
  for (const auto& [ma, sa] : a.terms()) {
    for (const auto& [mb, sb] : b.terms()) {
      Symbol even_part = poisson_bracket(sa, sb);
      if (!even_part.is_known_zero()) detail::accumulate_product(out, even_part, multiply_monomials(ma, mb, zero));
      bool odd_part = false;
      Symbol product;
      for (int k = 0; k < n; ++k) {
        const OddGenerator xi{OddKind::xi, k};
        const OddGenerator eta{OddKind::eta, k};
        for (const auto& [ga, gb] : {std::pair{xi, eta}, std::pair{eta, xi}}) {
          auto [s1, ra] = left_derivative(ma, ga);
          if (s1 == 0) continue;
          auto [s2, rb] = left_derivative(mb, gb);
          if (s2 == 0) continue;
          if (!odd_part) {
            product = commutative_product(sa, sb);
            odd_part = true;
          }
          Scalar c = s1 * s2 > 0 ? sign : -sign;
          detail::accumulate_product(out, product * c, multiply_monomials(ra, rb, zero));
        }
      }
    }
  }
  return out;
}

/// Product on P_hbar(2N): (A (x) X)(B (x) Y) = (A o_hbar B) (x) XY.
inline SuperSymbol super_product(const SuperSymbol& a, const SuperSymbol& b, const Scalar& hbar) {
  SuperSymbol out(a.rank(), std::min(a.cutoff(), b.cutoff()));
  for (const auto& [ma, sa] : a.terms()) {
    for (const auto& [mb, sb] : b.terms()) {
      auto grassmann = multiply_monomials(ma, mb, hbar);
      if (grassmann.empty()) continue;
      detail::accumulate_product(out, circ(sa, sb, hbar), grassmann);
    }
  }
  return out;
}

/// Product on P_h(2N) with h the formal parameter.
inline SuperSymbol super_product_h(const SuperSymbol& a, const SuperSymbol& b) {
  return super_product(a, b, Scalar::param(Param::h));
}

/// Graded commutator AB - (-1)^{p(A)p(B)} BA at a given hbar (no division).
inline SuperSymbol super_commutator(const SuperSymbol& a, const SuperSymbol& b, const Scalar& hbar) {
  const int pa = a.homogeneous_parity("super_commutator");
  const int pb = b.homogeneous_parity("super_commutator");
  SuperSymbol ab = super_product(a, b, hbar);
  SuperSymbol ba = super_product(b, a, hbar);
  return (pa & pb) ? ab + ba : ab - ba;
}

/// [A, B]_h = (AB - (-1)^{p(A)p(B)} BA) / h, divided exactly.
inline SuperSymbol super_bracket_h(const SuperSymbol& a, const SuperSymbol& b) {
  return super_commutator(a, b, Scalar::param(Param::h)).map_symbols([](const Symbol& s) {
    return s.divided_by_param(Param::h);
  });
}

}  // namespace superweyl
