#pragma once

#include <map>
#include <string>
#include <vector>

#include "superweyl/errors.hpp"
#include "superweyl/gamma.hpp"
#include "superweyl/realizations/phi.hpp"
#include "superweyl/realizations/theta.hpp"

namespace superweyl {

namespace iso_detail {

// Eigenvalue of ad(x) on the basis element b; throws if b is not an eigenvector.
inline Scalar ad_eigenvalue(const SuperLieAlgebra& L, int x, int b) {
  const LieVector& v = L.bracket(x, b);
  if (v.is_zero()) return Scalar();
  if (v.terms().size() != 1 || v.terms().begin()->first != b) {
    throw NoIsomorphismFound("ad " + L.name(x) + " is not diagonal on " + L.name(b));
  }
  return v.terms().begin()->second;
}

inline int even_integer(const Scalar& x, const std::string& what) {
  if (!x.is_constant()) throw NoIsomorphismFound(what + " is not a number");
  const GaussianRational g = x.constant_value();
  for (int k = -8; k <= 8; ++k) {
    if (g == GaussianRational(k)) {
      if (k % 2 != 0) throw NoIsomorphismFound(what + " is odd");
      return k;
    }
  }
  throw NoIsomorphismFound(what + " is not a small integer");
}

inline Scalar power(const Scalar& x, int e) {
  Scalar out(1);
  for (int k = 0; k < (e < 0 ? -e : e); ++k) out = e < 0 ? out / x : out * x;
  return out;
}

}  // namespace iso_detail

/// Isomorphism from the contracted algebra (basis E1..F2, C+, C, C-, T1..D4)
/// onto the universal central extension of psl(2|2).
///
/// Both matrix realizations share the matrices X~: phi(X) = kappa q^m X~ and
/// theta(Z) = mu s^n X~ (on t^lambda). Matching them gives X -> (kappa/mu)
/// q^m s^-n Z, which involves the irrational ratio q/s. Composing with the
/// grading automorphism X -> (s/q)^k X, k the ad H1 eigenvalue of X, leaves
/// only even powers of q and s; these are replaced by q^2 = 2/(1+ab),
/// s^2 = 1/(1+ab). The result must be free of a and b and pass the bracket check.
inline LieMap find_isomorphism_to_hat_psl(const SuperLieAlgebra& gamma, const SuperLieAlgebra& hat) {
  const Scalar a = Scalar::param(Param::a);
  const Scalar b = Scalar::param(Param::b);
  const Scalar q2 = phi_q_squared(a, b);
  const Scalar s2 = theta_s_squared(a, b);
  const auto phi = phi_dictionary(a, b);
  std::map<std::string, const ThetaEntry*> by_target;
  const auto theta = theta_dictionary(a, b);
  for (const auto& e : theta) by_target[e.target] = &e;

  const int h1 = gamma.index_of("H1");
  LieMap out;
  out.odd_square = Scalar(1);
  for (int x = 0; x < static_cast<int>(gamma.dim()); ++x) {
    const PhiEntry& p = find_phi_entry(phi, gamma.name(x));
    auto it = by_target.find(p.name);
    if (it == by_target.end()) throw NoIsomorphismFound("no element of the extension acts as " + p.name + "~");
    const ThetaEntry& t = *it->second;
    const int k = [&] {
      const Scalar h = iso_detail::ad_eigenvalue(gamma, h1, x);
      return iso_detail::even_integer(h * Scalar(2), "twice the H1 weight of " + gamma.name(x)) / 2;
    }();
    const int eq = p.q_power - k;
    const int es = k - t.s_power;
    if (eq % 2 != 0 || es % 2 != 0) throw NoIsomorphismFound("odd power of q or s left on " + gamma.name(x));
    Scalar c = p.coeff / t.coeff * iso_detail::power(q2, eq / 2) * iso_detail::power(s2, es / 2);
    const Scalar sample = c.substitute(Param::a, GaussianRational(2)).substitute(Param::b, GaussianRational(3));
    if (!(c == sample) || sample.involves(Param::lambda)) {
      throw NoIsomorphismFound("coefficient of " + gamma.name(x) + " depends on the parameters: " + c.to_string());
    }
    out.images.push_back(LieVector::unit(hat.index_of(t.name), sample));
  }
  const HomomorphismResult r = verify_lie_map(gamma, hat, out.images, out.odd_square);
  if (!r.ok()) {
    const auto& f = r.failures.front();
    throw NoIsomorphismFound("bracket [" + gamma.name(f.x) + ", " + gamma.name(f.y) + "] maps to " + f.lhs + " instead of " + f.rhs);
  }
  if (!is_bijective(gamma, hat, out.images)) throw NoIsomorphismFound("images are linearly dependent");
  return out;
}

}  // namespace superweyl
