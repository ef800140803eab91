#include <gtest/gtest.h>

#include "properties.hpp"

using namespace superweyl;
using namespace superweyl::testing;

namespace {

const Scalar h = Scalar::param(Param::h);

SuperSymbol p(std::string_view s) { return parse_supersymbol(s); }
SuperSymbol ph(std::string_view s) { return parse_supersymbol(s, 2, h); }

/// The super Poisson bracket written out with Grassmann-element derivatives:
/// A_tau B_t - A_t B_tau + (-1)^{p(A)+1} sum_i (A_{xi_i} B_{eta_i} + A_{eta_i} B_{xi_i}).
SuperSymbol poisson_oracle(const SuperSymbol& a, const SuperSymbol& b, int pa) {
  SuperSymbol out(2, std::min(a.cutoff(), b.cutoff()));
  const Scalar sign = pa ? Scalar(1) : Scalar(-1);
  for (const auto& [ma, sa] : a.terms()) {
    const GrassmannElement ga(2, {{ma, Scalar(1)}});
    for (const auto& [mb, sb] : b.terms()) {
      const GrassmannElement gb(2, {{mb, Scalar(1)}});
      out += SuperSymbol::from(poisson_bracket(sa, sb), grassmann_mul(ga, gb, Scalar(0)));
      GrassmannElement odd(2);
      for (int k = 1; k <= 2; ++k) {
        odd += grassmann_mul(odd_derivative(ga, OddGenerator::xi(k)), odd_derivative(gb, OddGenerator::eta(k)), Scalar(0));
        odd += grassmann_mul(odd_derivative(ga, OddGenerator::eta(k)), odd_derivative(gb, OddGenerator::xi(k)), Scalar(0));
      }
      if (!odd.is_zero()) out += SuperSymbol::from(commutative_product(sa, sb), odd * sign);
    }
  }
  return out;
}

}  // namespace

TEST(SuperSymbol, PoissonExamples) {
  EXPECT_EQ(super_poisson(p("t*xi1"), p("t*eta1")).to_string(), "t^2");
  EXPECT_EQ(super_poisson(p("xi1"), p("eta1")).to_string(), "1");
  EXPECT_EQ(super_poisson(p("tau"), p("t*xi1")).to_string(), "xi1");
  EXPECT_EQ(super_poisson(p("t*xi1"), p("tau*eta1")).to_string(), "t*tau - xi1*eta1");
}

TEST(SuperSymbol, DeformedExamples) {
  EXPECT_EQ(super_bracket_h(ph("xi1"), ph("eta1")).to_string(), "1");
  EXPECT_EQ(super_bracket_h(ph("t*xi1"), ph("tau*eta1")).to_string(), "t*tau + h - xi1*eta1");
  EXPECT_TRUE(agrees(super_product_h(ph("eta1"), ph("xi1")), ph("h - xi1*eta1")));
}

TEST(SuperSymbol, ParserOrdersInLambdaH) {
  EXPECT_TRUE(agrees(ph("eta1*xi1"), ph("h - xi1*eta1")));
  EXPECT_TRUE(agrees(p("eta1*xi1"), -p("xi1*eta1")));
  EXPECT_FALSE(agrees(p("eta1*xi1"), p("xi1*eta1")));
  EXPECT_THROW(p("xi1 +"), ParseError);
  EXPECT_THROW(p("zeta1"), ParseError);
}

TEST(SuperSymbol, ParityChecks) {
  EXPECT_EQ(p("t*xi1 + eta2").parity(), 1);
  EXPECT_EQ(p("t + xi1*eta1").parity(), 0);
  EXPECT_THROW(super_poisson(p("t + xi1"), p("tau")), MixedParity);
}

TEST(SuperSymbolProperty, PoissonOracle) {
  Rng rng(kSeed);
  for (int k = 0; k < 200; ++k) {
    const int pa = random_parity(rng);
    const SuperSymbol a = random_supersymbol(rng, pa);
    const SuperSymbol b = random_supersymbol(rng, random_parity(rng));
    EXPECT_TRUE(agrees(super_poisson(a, b), poisson_oracle(a, b, pa))) << a.to_string() << " , " << b.to_string();
  }
}

TEST(SuperSymbolProperty, DeformedBracketLimitIsPoisson) {
  Rng rng(kSeed + 1);
  for (int k = 0; k < 200; ++k) {
    const SuperSymbol a = random_supersymbol(rng, random_parity(rng));
    const SuperSymbol b = random_supersymbol(rng, random_parity(rng));
    const SuperSymbol lim = super_bracket_h(a, b).substitute(Param::h, GaussianRational());
    EXPECT_TRUE(agrees(lim, super_poisson(a, b))) << a.to_string() << " , " << b.to_string();
  }
}

TEST(SuperSymbolProperty, GradedAntisymmetry) {
  Rng rng(kSeed + 2);
  for (int k = 0; k < 200; ++k) {
    const int pa = random_parity(rng), pb = random_parity(rng);
    const SuperSymbol a = random_supersymbol(rng, pa), b = random_supersymbol(rng, pb);
    const Scalar sign = (pa & pb) ? Scalar(1) : Scalar(-1);
    EXPECT_TRUE(agrees(super_poisson(a, b), super_poisson(b, a) * sign));
    EXPECT_TRUE(agrees(super_bracket_h(a, b), super_bracket_h(b, a) * sign));
  }
}

TEST(SuperSymbolProperty, ProductAssociativity) {
  const PropertyResult r = super_product_associativity(kSeed + 3, 200);
  EXPECT_EQ(r.cases, 200);
  EXPECT_TRUE(r.passed()) << r.failures.front();
}

TEST(SuperSymbolProperty, GradedJacobi) {
  for (const PropertyResult& r : bracket_jacobi(kSeed + 4, 200)) {
    EXPECT_EQ(r.cases, 200) << r.name;
    EXPECT_TRUE(r.passed()) << r.name << ": " << (r.failures.empty() ? "" : r.failures.front());
  }
}

TEST(SuperSymbolProperty, PrintParseRoundTrip) {
  Rng rng(kSeed + 5);
  for (int k = 0; k < 200; ++k) {
    const SuperSymbol a = random_supersymbol(rng, random_parity(rng), -2, 2, 0, 2);
    EXPECT_TRUE(agrees(p(a.to_string()), a)) << a.to_string();
  }
}
