#include <gtest/gtest.h>

#include "properties.hpp"

using namespace superweyl;
using namespace superweyl::testing;

namespace {

const Scalar one(1);
const Symbol t = Symbol::t();
const Symbol tau = Symbol::tau();

Symbol parse(std::string_view text, int cutoff = Symbol::kDefaultCutoff) {
  const SuperSymbol s = parse_supersymbol(text, 2, Scalar(), cutoff);
  return s.component(GrassmannMonomial{});
}

}  // namespace

TEST(Symbol, WeylRelation) {
  EXPECT_EQ(circ(tau, t, one), commutative_product(t, tau) + Symbol::constant(one));
  EXPECT_EQ(circ(t, tau, one), commutative_product(t, tau));
  EXPECT_EQ(lie_bracket_h(tau, t), Symbol::constant(one));
  EXPECT_EQ(poisson_bracket(tau, t), Symbol::constant(one));
}

TEST(Symbol, InverseOfTau) {
  EXPECT_EQ(circ(Symbol::tau(-1), tau, one), Symbol::constant(one));
  EXPECT_EQ(circ(tau, Symbol::tau(-1), one), Symbol::constant(one));
  // tau^-1 o t = t tau^-1 - tau^-2, exactly.
  const Symbol x = circ(Symbol::tau(-1), t, one);
  EXPECT_TRUE(x.exact());
  EXPECT_EQ(x, parse("t*tau^-1 - tau^-2"));
}

TEST(Symbol, TruncationIsReported) {
  // t^-1 o tau^-1 needs every order; only degrees >= cutoff are kept.
  const Symbol x = circ(Symbol::tau(-1), Symbol::t(-1), one);
  EXPECT_FALSE(x.exact());
  EXPECT_EQ(x.cutoff(), Symbol::kDefaultCutoff);
  EXPECT_NE(x.to_string().find("+ O(tau^-9)"), std::string::npos) << x.to_string();
  const Symbol deeper = circ(Symbol::tau(-1, -12), Symbol::t(-1, -12), one);
  EXPECT_TRUE(agrees(x, deeper));
  EXPECT_NE(x.to_string(), deeper.to_string());
}

TEST(Symbol, CutoffOverlapDetectsDifferences) {
  const Symbol x = circ(Symbol::tau(-1), Symbol::t(-1), one);
  const Symbol y = x + Symbol::monomial(one, 0, -3);
  EXPECT_FALSE(agrees(x, y));
  // Below the validity floor nothing is compared.
  const Symbol z = x + Symbol::monomial(one, 0, -20, -20);
  EXPECT_TRUE(agrees(x, z));
}

TEST(Symbol, PoissonIsLimitOfDeformedBracket) {
  Rng rng(kSeed);
  for (int k = 0; k < 200; ++k) {
    const Symbol a = random_symbol(rng, -2, 2, -2, 2);
    const Symbol b = random_symbol(rng, -2, 2, -2, 2);
    const Symbol lim = lie_bracket_h(a, b).substitute(Param::h, GaussianRational());
    EXPECT_TRUE(agrees(lim, poisson_bracket(a, b))) << a.to_string() << " , " << b.to_string();
  }
}

TEST(Symbol, DivisionByHRequiresDivisibility) {
  EXPECT_THROW(Symbol::constant(one).divided_by_param(Param::h), NonDivisibleByH);
}

TEST(SymbolIo, TextForm) {
  const Symbol x = parse("t^2*tau^-1 + (1/2)*t");
  EXPECT_EQ(x, commutative_product(Symbol::t(2), Symbol::tau(-1)) + Symbol::t() * Scalar::rational(1, 2));
  EXPECT_EQ(parse(x.to_string()), x);
}

TEST(SymbolProperty, CircAssociativity) {
  const PropertyResult r = circ_associativity(kSeed, 200);
  EXPECT_EQ(r.cases, 200);
  EXPECT_TRUE(r.passed()) << r.failures.front();
}

TEST(SymbolProperty, WeylClosure) {
  const PropertyResult r = weyl_closure(kSeed + 1, 200);
  EXPECT_TRUE(r.passed()) << r.failures.front();
}

TEST(SymbolProperty, DerivationRule) {
  const PropertyResult r = derivation_rule(kSeed + 2, 200);
  EXPECT_TRUE(r.passed()) << r.failures.front();
}

TEST(SymbolProperty, PoissonAntisymmetryAndLeibniz) {
  Rng rng(kSeed + 3);
  for (int k = 0; k < 200; ++k) {
    const Symbol a = random_symbol(rng, -2, 2, -2, 2), b = random_symbol(rng, -2, 2, -2, 2), c = random_symbol(rng, -2, 2, -2, 2);
    EXPECT_TRUE(agrees(poisson_bracket(a, b), -poisson_bracket(b, a)));
    EXPECT_TRUE(agrees(poisson_bracket(a, commutative_product(b, c)),
                       commutative_product(poisson_bracket(a, b), c) + commutative_product(b, poisson_bracket(a, c))));
  }
}

TEST(SymbolProperty, TruncationAgreesAcrossCutoffs) {
  Rng rng(kSeed + 4);
  for (int k = 0; k < 200; ++k) {
    const Symbol a = random_symbol(rng, -2, 2, -2, 1);
    const Symbol b = random_symbol(rng, -2, 2, -2, 1);
    EXPECT_TRUE(agrees(circ(a, b, one), circ(a.with_cutoff(-12), b.with_cutoff(-12), one)));
  }
}
