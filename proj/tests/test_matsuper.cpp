#include <gtest/gtest.h>

#include "properties.hpp"

using namespace superweyl;
using namespace superweyl::testing;

namespace {

const WeylElement t = WeylElement::t();
const WeylElement d = WeylElement::d();

WeylSupermatrix random_weyl_matrix(Rng& rng, int parity) {
  WeylSupermatrix m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if ((WeylSupermatrix::block(static_cast<std::size_t>(i)) + WeylSupermatrix::block(static_cast<std::size_t>(j))) % 2 != parity) continue;
      if (uniform(rng, 0, 2) == 0) continue;
      m(i, j) = WeylElement(random_differential(rng));
    }
  }
  return m;
}

}  // namespace

TEST(WeylElement, CanonicalRelation) {
  EXPECT_EQ((d * t).to_string(), "t*tau + 1");
  EXPECT_EQ(d * t - t * d, WeylElement(1));
  EXPECT_TRUE((t * d).in_weyl_algebra());
  EXPECT_FALSE(WeylElement::d(-1).in_weyl_algebra());
}

TEST(WeylElement, InverseOfD) {
  const WeylElement dinv = WeylElement::d(-1);
  EXPECT_EQ(d * dinv, WeylElement(1));
  EXPECT_EQ(dinv * d, WeylElement(1));
}

TEST(Supermatrix, ParityAndSupertrace) {
  const ScalarSupermatrix e = ScalarSupermatrix::unit(0, 2, Scalar(1));
  const ScalarSupermatrix f = ScalarSupermatrix::unit(2, 0, Scalar(1));
  EXPECT_EQ(e.parity(), 1);
  EXPECT_EQ((e + ScalarSupermatrix::identity()).parity(), -1);
  EXPECT_EQ(supercommutator(e, f), ScalarSupermatrix::unit(0, 0, Scalar(1)) + ScalarSupermatrix::unit(2, 2, Scalar(1)));
  EXPECT_EQ(supertrace(ScalarSupermatrix::identity()), Scalar(0));
  EXPECT_THROW(supercommutator(e + ScalarSupermatrix::identity(), f), MixedParity);
}

TEST(Supermatrix, SupertraceNeedsCommutativeCoefficients) {
  EXPECT_THROW(supertrace(WeylSupermatrix::identity()), NonCommutativeCoefficients);
}

TEST(SupermatrixProperty, SupertraceKillsSupercommutators) {
  Rng rng(kSeed);
  for (int k = 0; k < 200; ++k) {
    const int px = random_parity(rng), py = random_parity(rng);
    const ScalarSupermatrix x = random_supermatrix(rng, px), y = random_supermatrix(rng, py);
    EXPECT_TRUE(supertrace(supercommutator(x, y)).is_zero());
  }
}

TEST(SupermatrixProperty, GradedJacobiOverScalars) {
  Rng rng(kSeed + 1);
  for (int k = 0; k < 200; ++k) {
    const int px = random_parity(rng), py = random_parity(rng), pz = random_parity(rng);
    const auto x = random_supermatrix(rng, px), y = random_supermatrix(rng, py), z = random_supermatrix(rng, pz);
    EXPECT_TRUE(graded_jacobi(x, px, y, py, z, pz, supercommutator<Scalar>, [](const ScalarSupermatrix& m) { return m.is_zero(); }));
  }
}

TEST(SupermatrixProperty, GradedJacobiOverWeyl) {
  Rng rng(kSeed + 2);
  for (int k = 0; k < 200; ++k) {
    const int px = random_parity(rng), py = random_parity(rng), pz = random_parity(rng);
    const auto x = random_weyl_matrix(rng, px), y = random_weyl_matrix(rng, py), z = random_weyl_matrix(rng, pz);
    EXPECT_TRUE(graded_jacobi(x, px, y, py, z, pz, supercommutator<WeylElement>, [](const WeylSupermatrix& m) { return m == WeylSupermatrix(); }));
  }
}

TEST(SupermatrixProperty, ProductAssociativityOverWeyl) {
  Rng rng(kSeed + 3);
  for (int k = 0; k < 200; ++k) {
    const auto x = random_weyl_matrix(rng, random_parity(rng)), y = random_weyl_matrix(rng, random_parity(rng)),
               z = random_weyl_matrix(rng, random_parity(rng));
    EXPECT_EQ((x * y) * z, x * (y * z));
  }
}
