#pragma once

// Seeded random elements and the kernel property suites shared by the unit
// tests and the acceptance binary.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "superweyl/superweyl.hpp"

namespace superweyl::testing {

inline constexpr std::uint64_t kSeed = 20240611;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Small Gaussian rational, nonzero when asked.
inline Scalar random_number(Rng& rng, bool nonzero = false) {
  return Scalar(nonzero ? sample_nonzero_gaussian_rational(rng) : sample_gaussian_rational(rng));
}

/// Polynomial in up to two of the given parameters with small coefficients.
inline Scalar random_scalar(Rng& rng, const std::vector<Param>& params) {
  Scalar out = random_number(rng);
  const long terms = uniform(rng, 1, 3);
  for (long k = 0; k < terms; ++k) {
    Scalar term = random_number(rng, true);
    if (!params.empty()) {
      const Param p = params[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(params.size()) - 1))];
      term *= Scalar::param(p, static_cast<int>(uniform(rng, 1, 2)));
    }
    out += term;
  }
  return out;
}

/// Rational function: random_scalar over a nonzero random_scalar.
inline Scalar random_fraction(Rng& rng, const std::vector<Param>& params) {
  Scalar den = random_scalar(rng, params);
  while (den.is_zero()) den = random_scalar(rng, params);
  return random_scalar(rng, params) / den;
}

/// Sum of monomials c t^e tau^d with e in [t_lo, t_hi], d in [d_lo, d_hi].
inline Symbol random_symbol(Rng& rng, int t_lo, int t_hi, int d_lo, int d_hi, int cutoff = Symbol::kDefaultCutoff,
                            int max_terms = 3) {
  Symbol out(cutoff);
  const long terms = uniform(rng, 1, max_terms);
  for (long k = 0; k < terms; ++k) {
    out = out + Symbol::monomial(random_number(rng, true), static_cast<int>(uniform(rng, t_lo, t_hi)),
                                 static_cast<int>(uniform(rng, d_lo, d_hi)), cutoff);
  }
  return out;
}

/// Differential operator: polynomial coefficients, tau powers 0..2.
inline Symbol random_differential(Rng& rng) { return random_symbol(rng, 0, 3, 0, 2); }

inline GrassmannMonomial random_monomial(Rng& rng, int parity = -1) {
  while (true) {
    GrassmannMonomial m;
    m.xi = static_cast<std::uint16_t>(uniform(rng, 0, 3));
    m.eta = static_cast<std::uint16_t>(uniform(rng, 0, 3));
    if (parity < 0 || m.parity() == parity) return m;
  }
}

/// Element of Lambda(4) with up to four terms; homogeneous when parity >= 0.
inline GrassmannElement random_grassmann(Rng& rng, int parity = -1) {
  GrassmannElement::Terms terms;
  const long count = uniform(rng, 1, 4);
  for (long k = 0; k < count; ++k) terms[random_monomial(rng, parity)] += random_number(rng, true);
  return GrassmannElement(2, terms);
}

inline SuperSymbol random_supersymbol(Rng& rng, int parity, int t_lo = -1, int t_hi = 2, int d_lo = -1, int d_hi = 2,
                                      int cutoff = Symbol::kDefaultCutoff) {
  SuperSymbol out(2, cutoff);
  const long count = uniform(rng, 1, 3);
  for (long k = 0; k < count; ++k) {
    out += SuperSymbol::from(random_symbol(rng, t_lo, t_hi, d_lo, d_hi, cutoff, 2), random_monomial(rng, parity));
  }
  return out;
}

/// Homogeneous random (2|2) matrix with numeric entries.
inline ScalarSupermatrix random_supermatrix(Rng& rng, int parity) {
  ScalarSupermatrix m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if ((ScalarSupermatrix::block(static_cast<std::size_t>(i)) + ScalarSupermatrix::block(static_cast<std::size_t>(j))) % 2 != parity) continue;
      if (uniform(rng, 0, 2) == 0) continue;
      m(i, j) = random_number(rng);
    }
  }
  return m;
}

/// Random homogeneous element of a structure-constant algebra.
inline LieVector random_lie_element(Rng& rng, const SuperLieAlgebra& L, int parity) {
  LieVector v;
  for (int k = 0; k < static_cast<int>(L.dim()); ++k) {
    if (L.parity(k) == parity && uniform(rng, 0, 2) == 0) v.add(k, random_number(rng));
  }
  return v;
}

inline int random_parity(Rng& rng) { return static_cast<int>(uniform(rng, 0, 1)); }

/// Outcome of a seeded property suite.
struct PropertyResult {
  explicit PropertyResult(std::string n) : name(std::move(n)) {}

  std::string name;
  int cases = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
  void check(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (!ok && failures.size() < 5) failures.push_back(describe());
  }
};

/// Graded Jacobi identity for a bracket on homogeneous elements:
/// (-1)^{xz}[x,[y,z]] + (-1)^{yx}[y,[z,x]] + (-1)^{zy}[z,[x,y]] = 0.
template <class T, class Bracket, class IsZero>
bool graded_jacobi(const T& x, int px, const T& y, int py, const T& z, int pz, Bracket br, IsZero is_zero) {
  const auto sign = [](int a, int b) { return (a & b) ? Scalar(-1) : Scalar(1); };
  const T sum = br(x, br(y, z)) * sign(px, pz) + br(y, br(z, x)) * sign(py, px) + br(z, br(x, y)) * sign(pz, py);
  return is_zero(sum);
}

/// (A o_hbar B) o_hbar C agrees with A o_hbar (B o_hbar C) where both are valid.
inline PropertyResult circ_associativity(std::uint64_t seed, int cases) {
  PropertyResult r{"circ_h associativity"};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    const Scalar hbar = k % 4 == 0 ? Scalar::param(Param::h) : random_number(rng, true);
    const Symbol a = random_symbol(rng, -2, 2, -2, 2);
    const Symbol b = random_symbol(rng, -2, 2, -2, 2);
    const Symbol c = random_symbol(rng, -2, 2, -2, 2);
    const Symbol left = circ(circ(a, b, hbar), c, hbar);
    const Symbol right = circ(a, circ(b, c, hbar), hbar);
    r.check(agrees(left, right), [&] { return "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")"; });
  }
  return r;
}

/// Associativity of the super product on P_h(4) modulo the cutoff.
inline PropertyResult super_product_associativity(std::uint64_t seed, int cases) {
  PropertyResult r{"super_product_h associativity"};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    const SuperSymbol a = random_supersymbol(rng, -1);
    const SuperSymbol b = random_supersymbol(rng, -1);
    const SuperSymbol c = random_supersymbol(rng, -1);
    const SuperSymbol left = super_product_h(super_product_h(a, b), c);
    const SuperSymbol right = super_product_h(a, super_product_h(b, c));
    r.check(agrees(left, right), [&] { return "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")"; });
  }
  return r;
}

/// Graded Jacobi for the super Poisson bracket, [ , ]_h on P_h(4), the
/// Poisson and [ , ]_h brackets of symbols, matrix supercommutators and
/// structure-constant algebras.
inline std::vector<PropertyResult> bracket_jacobi(std::uint64_t seed, int cases) {
  std::vector<PropertyResult> out;
  Rng rng(seed);
  {
    PropertyResult r{"super Poisson graded Jacobi"};
    for (int k = 0; k < cases; ++k) {
      const int px = random_parity(rng), py = random_parity(rng), pz = random_parity(rng);
      const SuperSymbol x = random_supersymbol(rng, px), y = random_supersymbol(rng, py), z = random_supersymbol(rng, pz);
      r.check(graded_jacobi(x, px, y, py, z, pz, super_poisson, [](const SuperSymbol& s) { return agrees(s, SuperSymbol(2, s.cutoff())); }),
              [&] { return "(" + x.to_string() + ", " + y.to_string() + ", " + z.to_string() + ")"; });
    }
    out.push_back(r);
  }
  {
    PropertyResult r{"[ , ]_h graded Jacobi on P_h(4)"};
    for (int k = 0; k < cases; ++k) {
      const int px = random_parity(rng), py = random_parity(rng), pz = random_parity(rng);
      const SuperSymbol x = random_supersymbol(rng, px, 0, 2, 0, 1), y = random_supersymbol(rng, py, 0, 2, 0, 1),
                        z = random_supersymbol(rng, pz, 0, 2, 0, 1);
      r.check(graded_jacobi(x, px, y, py, z, pz, super_bracket_h, [](const SuperSymbol& s) { return agrees(s, SuperSymbol(2, s.cutoff())); }),
              [&] { return "(" + x.to_string() + ", " + y.to_string() + ", " + z.to_string() + ")"; });
    }
    out.push_back(r);
  }
  {
    PropertyResult r{"symbol Poisson and [ , ]_h Jacobi"};
    for (int k = 0; k < cases; ++k) {
      const Symbol x = random_symbol(rng, -2, 2, -2, 2), y = random_symbol(rng, -2, 2, -2, 2), z = random_symbol(rng, -2, 2, -2, 2);
      const auto zero = [](const Symbol& s) { return agrees(s, Symbol(s.cutoff())); };
      const bool poisson = graded_jacobi(x, 0, y, 0, z, 0, poisson_bracket, zero);
      const Symbol xd = random_symbol(rng, 0, 2, 0, 2), yd = random_symbol(rng, 0, 2, 0, 2), zd = random_symbol(rng, 0, 2, 0, 2);
      const bool deformed = graded_jacobi(xd, 0, yd, 0, zd, 0, lie_bracket_h, zero);
      r.check(poisson && deformed, [&] { return "(" + x.to_string() + ", " + y.to_string() + ", " + z.to_string() + ")"; });
    }
    out.push_back(r);
  }
  {
    PropertyResult r{"supercommutator graded Jacobi on (2|2) matrices"};
    for (int k = 0; k < cases; ++k) {
      const int px = random_parity(rng), py = random_parity(rng), pz = random_parity(rng);
      const auto x = random_supermatrix(rng, px), y = random_supermatrix(rng, py), z = random_supermatrix(rng, pz);
      r.check(graded_jacobi(x, px, y, py, z, pz, supercommutator<Scalar>, [](const ScalarSupermatrix& m) { return m.is_zero(); }),
              [&] { return x.to_string() + y.to_string() + z.to_string(); });
    }
    out.push_back(r);
  }
  {
    PropertyResult r{"graded Jacobi in Gamma(sigma), sl(2|2) and the central extension"};
    Rng point_rng(seed + 1);
    const Scalar s1 = random_number(point_rng, true), s2 = random_number(point_rng, true);
    const std::vector<SuperLieAlgebra> algebras{build_gamma({s1, s2, -s1 - s2}), build_sl22(), build_psl22_hat()};
    for (int k = 0; k < cases; ++k) {
      const SuperLieAlgebra& L = algebras[static_cast<std::size_t>(k) % algebras.size()];
      const int px = random_parity(rng), py = random_parity(rng), pz = random_parity(rng);
      const LieVector x = random_lie_element(rng, L, px), y = random_lie_element(rng, L, py), z = random_lie_element(rng, L, pz);
      r.check(graded_jacobi(x, px, y, py, z, pz, [&L](const LieVector& a, const LieVector& b) { return L.bracket(a, b); },
                            [](const LieVector& v) { return v.is_zero(); }),
              [&] { return L.format(x) + ", " + L.format(y) + ", " + L.format(z); });
    }
    out.push_back(r);
  }
  return out;
}

/// Relations of Lambda_h(4): xi_i eta_j + eta_j xi_i = h delta_ij, all other
/// pairs of generators anticommute.
inline PropertyResult lambda_h_relations() {
  PropertyResult r{"Lambda_h(4) relation table"};
  const Scalar h = Scalar::param(Param::h);
  std::vector<std::pair<std::string, GrassmannElement>> gens;
  for (int k = 1; k <= 2; ++k) {
    gens.emplace_back("xi" + std::to_string(k), GrassmannElement::xi(2, k));
    gens.emplace_back("eta" + std::to_string(k), GrassmannElement::eta(2, k));
  }
  for (const auto& [nx, x] : gens) {
    for (const auto& [ny, y] : gens) {
      const GrassmannElement anti = grassmann_mul(x, y, h) + grassmann_mul(y, x, h);
      const bool paired = nx.substr(0, 2) != ny.substr(0, 2) && nx.back() == ny.back();
      const GrassmannElement expected = GrassmannElement::constant(2, paired ? h : Scalar(0));
      r.check(anti == expected, [&] { return nx + "*" + ny + " + " + ny + "*" + nx + " = " + anti.to_string(); });
    }
  }
  return r;
}

/// Clifford oracle: xi_k acts on Lambda(psi1, psi2) as psi_k wedge, eta_k as
/// h d/dpsi_k. The representation is faithful for h != 0, so products in
/// Lambda_h(4) must map to matrix products.
class CliffordOracle {
 public:
  using Matrix = std::array<std::array<Scalar, 4>, 4>;

  explicit CliffordOracle(Scalar h) : h_(std::move(h)) {}

  Matrix generator(OddKind kind, int index) const {
    Matrix m{};
    const unsigned bit = 1U << index;
    for (unsigned s = 0; s < 4; ++s) {
      const int sign = (std::popcount(s & (bit - 1)) % 2) ? -1 : 1;
      if (kind == OddKind::xi && !(s & bit)) m[s | bit][s] = Scalar(sign);
      if (kind == OddKind::eta && (s & bit)) m[s & ~bit][s] = h_ * Scalar(sign);
    }
    return m;
  }

  static Matrix product(const Matrix& a, const Matrix& b) {
    Matrix out{};
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t l = 0; l < 4; ++l) {
        if (a[i][l].is_zero()) continue;
        for (std::size_t j = 0; j < 4; ++j) out[i][j] += a[i][l] * b[l][j];
      }
    }
    return out;
  }

  /// A normal-ordered monomial is the ordered product of its generators.
  Matrix of(const GrassmannElement& x) const {
    Matrix out{};
    for (const auto& [mono, c] : x.terms()) {
      Matrix m{};
      for (std::size_t k = 0; k < 4; ++k) m[k][k] = Scalar(1);
      for (int k = 0; k < 2; ++k) {
        if (mono.xi & (1U << k)) m = product(m, generator(OddKind::xi, k));
      }
      for (int k = 0; k < 2; ++k) {
        if (mono.eta & (1U << k)) m = product(m, generator(OddKind::eta, k));
      }
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) out[i][j] += c * m[i][j];
      }
    }
    return out;
  }

 private:
  Scalar h_;
};

/// Products in Lambda_h(4) against the Clifford oracle at numeric h, plus associativity.
inline PropertyResult grassmann_product_oracle(std::uint64_t seed, int cases) {
  PropertyResult r{"Lambda_h(4) product against the Clifford oracle"};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    const Scalar h = random_number(rng, true);
    const CliffordOracle oracle(h);
    const GrassmannElement x = random_grassmann(rng), y = random_grassmann(rng), z = random_grassmann(rng);
    const GrassmannElement xy = grassmann_mul(x, y, h);
    const bool matches = oracle.of(xy) == CliffordOracle::product(oracle.of(x), oracle.of(y));
    const bool assoc = grassmann_mul(xy, z, h) == grassmann_mul(x, grassmann_mul(y, z, h), h);
    r.check(matches && assoc, [&] { return x.to_string() + " * " + y.to_string() + " at h = " + h.to_string(); });
  }
  return r;
}

/// Applies a differential operator, written as sum p_k(t) d^k, to a Laurent polynomial.
inline LaurentPoly apply_operator(const Symbol& s, const LaurentPoly& f) {
  LaurentPoly out;
  for (const auto& [m, fc] : f.terms()) {
    for (const auto& [k, p] : s.terms()) {
      Scalar ff(1);
      for (int j = 0; j < k; ++j) ff *= Scalar(static_cast<long>(m - j));
      if (ff.is_zero()) continue;
      for (const auto& [e, c] : p.terms()) out = out + LaurentPoly::monomial(c * ff * fc, e + m - k);
    }
  }
  return out;
}

/// W closure: o_1 of two differential operators is a differential operator,
/// held exactly, and composes like the operators on t^m.
inline PropertyResult weyl_closure(std::uint64_t seed, int cases) {
  PropertyResult r{"W closure and composition on t^m"};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    const Symbol a = random_differential(rng), b = random_differential(rng);
    const Symbol ab = circ(a, b, Scalar(1));
    bool ok = ab.is_differential() && ab.exact();
    for (int m = -3; m <= 3 && ok; ++m) {
      const LaurentPoly tm = LaurentPoly::monomial(Scalar(1), m);
      ok = apply_operator(ab, tm) == apply_operator(a, apply_operator(b, tm));
    }
    r.check(ok, [&] { return a.to_string() + " o " + b.to_string() + " = " + ab.to_string(); });
  }
  return r;
}

/// d o a = d(a)/dt + a o d in W~ for Laurent polynomials a(t).
inline PropertyResult derivation_rule(std::uint64_t seed, int cases) {
  PropertyResult r{"d a = d(a) + a d"};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    const Symbol a = random_symbol(rng, -3, 3, 0, 0);
    const Symbol d = Symbol::tau();
    const Symbol lhs = circ(d, a, Scalar(1));
    const Symbol rhs = a.derivative_t() + circ(a, d, Scalar(1));
    r.check(lhs == rhs && lhs.exact(), [&] { return "a = " + a.to_string(); });
  }
  return r;
}

/// Every kernel suite at the given size.
inline std::vector<PropertyResult> kernel_properties(std::uint64_t seed, int cases) {
  std::vector<PropertyResult> all{circ_associativity(seed, cases), super_product_associativity(seed + 1, cases)};
  for (auto& r : bracket_jacobi(seed + 2, cases)) all.push_back(std::move(r));
  all.push_back(lambda_h_relations());
  all.push_back(grassmann_product_oracle(seed + 3, cases));
  all.push_back(weyl_closure(seed + 4, cases));
  all.push_back(derivation_rule(seed + 5, cases));
  return all;
}

}  // namespace superweyl::testing
