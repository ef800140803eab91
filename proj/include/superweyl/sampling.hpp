#pragma once

#include <cstdint>
#include <random>

#include "superweyl/rational.hpp"

namespace superweyl {

/// Deterministic generator used by every seeded check.
using Rng = std::mt19937_64;

/// Small Gaussian rational: numerators in [-5, 5], denominators in [1, 4];
/// the imaginary part is zero half of the time.
inline GaussianRational sample_gaussian_rational(Rng& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  std::bernoulli_distribution complex(0.5);
  Rational re = make_rational(num(rng), den(rng));
  Rational im = complex(rng) ? make_rational(num(rng), den(rng)) : Rational(0);
  return GaussianRational(re, im);
}

/// Nonzero variant of sample_gaussian_rational.
inline GaussianRational sample_nonzero_gaussian_rational(Rng& rng) {
  while (true) {
    GaussianRational g = sample_gaussian_rational(rng);
    if (!g.is_zero()) return g;
  }
}

}  // namespace superweyl
