#include <gtest/gtest.h>

#include "properties.hpp"

using namespace superweyl;
using superweyl::testing::kSeed;
using superweyl::testing::random_fraction;
using superweyl::testing::random_number;

namespace {

const Scalar alpha = Scalar::param(Param::alpha);
const Scalar h = Scalar::param(Param::h);

Assignment random_point(Rng& rng) {
  Assignment at;
  for (Param p : {Param::alpha, Param::h, Param::a, Param::b}) at[p] = sample_nonzero_gaussian_rational(rng);
  return at;
}

}  // namespace

TEST(GaussianRational, Arithmetic) {
  const GaussianRational z(make_rational(1), make_rational(2));
  const GaussianRational w(make_rational(3), make_rational(-1));
  EXPECT_EQ(z * w, GaussianRational(make_rational(5), make_rational(5)));
  EXPECT_EQ(z * z.inverse(), GaussianRational(make_rational(1)));
  EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(make_rational(-1)));
  EXPECT_EQ(z.conj().im(), make_rational(-2));
  EXPECT_EQ(z.norm(), make_rational(5));
}

TEST(GaussianRational, ZeroHasNoInverse) { EXPECT_THROW(GaussianRational().inverse(), DivisionByZero); }

TEST(ParamPoly, ExactDivision) {
  const ParamPoly a = ParamPoly::variable(Param::alpha);
  const ParamPoly one = ParamPoly::monomial(GaussianRational(make_rational(1)), Exponents{});
  const ParamPoly square = a * a - one;
  const auto q = square.exact_divide(a - one);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, a + one);
  EXPECT_FALSE((a * a + one).exact_divide(a - one).has_value());
  const auto r = square.divide_by_linear(Param::alpha, GaussianRational(make_rational(-1)));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, a - one);
}

TEST(ParamPoly, SubstituteAndEvaluate) {
  const ParamPoly p = ParamPoly::variable(Param::a) * ParamPoly::variable(Param::b) + ParamPoly::variable(Param::a);
  EXPECT_EQ(p.substitute(Param::b, GaussianRational(make_rational(-1))), ParamPoly());
  Assignment at{{Param::a, GaussianRational(make_rational(2))}, {Param::b, GaussianRational::i()}};
  EXPECT_EQ(p.evaluate(at), GaussianRational(make_rational(2), make_rational(2)));
}

TEST(Scalar, FractionsCompareByCrossMultiplication) {
  const Scalar x = (alpha * alpha - Scalar(1)) / (alpha - Scalar(1));
  EXPECT_EQ(x, alpha + Scalar(1));
  EXPECT_NE(x, alpha);
  EXPECT_EQ((alpha / h) * (h / alpha), Scalar(1));
}

TEST(Scalar, DivisionByZeroThrows) {
  EXPECT_THROW(Scalar(1) / Scalar(0), DivisionByZero);
  EXPECT_THROW(Scalar(0).inverse(), DivisionByZero);
}

TEST(Scalar, LimitsAndPoles) {
  const Scalar x = (alpha * alpha - Scalar(1)) / (alpha - Scalar(1));
  EXPECT_EQ(limit_at(x, Param::alpha, GaussianRational(make_rational(1))), Scalar(2));
  EXPECT_THROW(limit_at(Scalar(1) / (alpha - Scalar(1)), Param::alpha, GaussianRational(make_rational(1))), EssentialPole);
  EXPECT_THROW(specialize(Scalar(1) / alpha, {{Param::alpha, GaussianRational()}}), PoleAtPoint);
}

TEST(Scalar, SubstituteScalar) {
  const Scalar s3 = Scalar::param(Param::sigma3);
  const Scalar sum = Scalar::param(Param::sigma1) + Scalar::param(Param::sigma2) + s3;
  EXPECT_TRUE(sum.substitute(Param::sigma3, -Scalar::param(Param::sigma1) - Scalar::param(Param::sigma2)).is_zero());
  EXPECT_TRUE(sum.involves(Param::sigma2));
  EXPECT_FALSE(sum.involves(Param::alpha));
}

TEST(Scalar, LambdaAllowsNegativePowers) {
  const Scalar lambda = Scalar::param(Param::lambda);
  EXPECT_EQ(lambda.pow(-2) * lambda.pow(3), lambda);
  EXPECT_EQ(Scalar(1) / lambda, lambda.pow(-1));
}

TEST(ScalarIo, ParsesAndPrints) {
  EXPECT_EQ(parse_scalar("(1+alpha)/2"), (Scalar(1) + alpha) * Scalar::rational(1, 2));
  EXPECT_EQ(parse_scalar("2*i - 1/3"), Scalar(2) * Scalar::i() - Scalar::rational(1, 3));
  EXPECT_EQ(parse_scalar("alpha^2"), alpha * alpha);
  EXPECT_THROW(parse_scalar("alpha +"), ParseError);
  EXPECT_THROW(parse_scalar("omega"), ParseError);
}

TEST(ScalarProperty, FieldAxiomsAndEvaluation) {
  Rng rng(kSeed);
  const std::vector<Param> params{Param::alpha, Param::h, Param::a};
  for (int k = 0; k < 200; ++k) {
    const Scalar x = random_fraction(rng, params);
    const Scalar y = random_fraction(rng, params);
    const Scalar z = random_fraction(rng, params);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_TRUE((x - x).is_zero());
    if (!x.is_zero()) {
      EXPECT_EQ(x * x.inverse(), Scalar(1));
    }
    // Evaluation is a ring map wherever it is defined.
    const Assignment at = random_point(rng);
    try {
      EXPECT_EQ(specialize(x * y + z, at), specialize(x, at) * specialize(y, at) + specialize(z, at));
    } catch (const PoleAtPoint&) {
    }
  }
}

TEST(ScalarProperty, PrintParseRoundTrip) {
  Rng rng(kSeed + 1);
  for (int k = 0; k < 200; ++k) {
    const Scalar x = random_fraction(rng, {Param::alpha, Param::lambda, Param::sigma1});
    EXPECT_EQ(parse_scalar(x.to_string()), x) << x.to_string();
  }
}

TEST(ScalarProperty, GaussianRationalRoundTrip) {
  Rng rng(kSeed + 2);
  for (int k = 0; k < 200; ++k) {
    const Scalar x = random_number(rng);
    EXPECT_EQ(Scalar(parse_gaussian(x.to_string())), x) << x.to_string();
  }
}
