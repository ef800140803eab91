#include <gtest/gtest.h>

#include "properties.hpp"

using namespace superweyl;
using namespace superweyl::testing;

namespace {

const Scalar h = Scalar::param(Param::h);
const GrassmannElement xi1 = GrassmannElement::xi(2, 1);
const GrassmannElement xi2 = GrassmannElement::xi(2, 2);
const GrassmannElement eta1 = GrassmannElement::eta(2, 1);
const GrassmannElement eta2 = GrassmannElement::eta(2, 2);

GrassmannElement mul(const GrassmannElement& x, const GrassmannElement& y) { return grassmann_mul(x, y, h); }

}  // namespace

TEST(Grassmann, RelationTable) {
  const PropertyResult r = lambda_h_relations();
  EXPECT_EQ(r.cases, 16);
  EXPECT_TRUE(r.passed()) << r.failures.front();
}

TEST(Grassmann, SquaresVanish) {
  for (const auto* g : {&xi1, &xi2, &eta1, &eta2}) EXPECT_TRUE(mul(*g, *g).is_zero());
}

TEST(Grassmann, NormalOrdering) {
  // eta1 xi1 = h - xi1 eta1
  EXPECT_EQ(mul(eta1, xi1), GrassmannElement::constant(2, h) - mul(xi1, eta1));
  EXPECT_EQ(mul(xi2, xi1), -mul(xi1, xi2));
  const GrassmannElement top = mul(mul(xi1, xi2), mul(eta1, eta2));
  EXPECT_EQ(top.terms().size(), 1U);
  EXPECT_EQ(top.parity(), 0);
}

TEST(Grassmann, ExteriorAlgebraAtZero) {
  // At hbar = 0 the 16 normal-ordered monomials are independent and xi eta = -eta xi.
  EXPECT_TRUE((grassmann_mul(xi1, eta1, Scalar(0)) + grassmann_mul(eta1, xi1, Scalar(0))).is_zero());
  std::set<GrassmannMonomial> seen;
  for (unsigned x = 0; x < 4; ++x) {
    for (unsigned e = 0; e < 4; ++e) seen.insert(GrassmannMonomial{static_cast<std::uint16_t>(x), static_cast<std::uint16_t>(e)});
  }
  EXPECT_EQ(seen.size(), 16U);
}

TEST(Grassmann, ParityOfMixedElement) {
  EXPECT_EQ((xi1 + eta2).parity(), 1);
  EXPECT_EQ((xi1 + mul(xi1, xi2)).parity(), -1);
}

TEST(Grassmann, IndexOutOfRange) {
  EXPECT_THROW(GrassmannElement::xi(2, 3), IndexOutOfRange);
  EXPECT_THROW(parse_supersymbol("xi3"), IndexOutOfRange);
}

TEST(Grassmann, LeftDerivatives) {
  const GrassmannElement x12 = mul(xi1, xi2);
  EXPECT_EQ(odd_derivative(x12, OddGenerator::xi(1)), xi2);
  EXPECT_EQ(odd_derivative(x12, OddGenerator::xi(2)), -xi1);
  EXPECT_TRUE(odd_derivative(x12, OddGenerator::eta(1)).is_zero());
}

TEST(GrassmannProperty, CliffordOracle) {
  const PropertyResult r = grassmann_product_oracle(kSeed, 200);
  EXPECT_EQ(r.cases, 200);
  EXPECT_TRUE(r.passed()) << r.failures.front();
}

TEST(GrassmannProperty, GradedLeibnizRule) {
  Rng rng(kSeed + 7);
  for (int k = 0; k < 200; ++k) {
    const int px = random_parity(rng);
    const GrassmannElement x = random_grassmann(rng, px);
    const GrassmannElement y = random_grassmann(rng);
    const OddGenerator g = random_parity(rng) ? OddGenerator::xi(static_cast<int>(uniform(rng, 1, 2)))
                                              : OddGenerator::eta(static_cast<int>(uniform(rng, 1, 2)));
    const Scalar sign = px ? Scalar(-1) : Scalar(1);
    const GrassmannElement lhs = odd_derivative(grassmann_mul(x, y, Scalar(0)), g);
    const GrassmannElement rhs =
        grassmann_mul(odd_derivative(x, g), y, Scalar(0)) + grassmann_mul(x, odd_derivative(y, g), Scalar(0)) * sign;
    EXPECT_EQ(lhs, rhs) << x.to_string() << " | " << y.to_string();
  }
}

TEST(GrassmannProperty, AssociativityWithFormalH) {
  Rng rng(kSeed + 8);
  for (int k = 0; k < 200; ++k) {
    const GrassmannElement x = random_grassmann(rng), y = random_grassmann(rng), z = random_grassmann(rng);
    EXPECT_EQ(mul(mul(x, y), z), mul(x, mul(y, z)));
  }
}
