#pragma once

#include <stdexcept>
#include <string>

namespace superweyl {

/// Base class of every error raised by the library.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SUPERWEYL_DEFINE_ERROR(Name)            \
  class Name : public AlgebraError {            \
   public:                                      \
    using AlgebraError::AlgebraError;           \
  }

SUPERWEYL_DEFINE_ERROR(DivisionByZero);
SUPERWEYL_DEFINE_ERROR(PoleAtPoint);
SUPERWEYL_DEFINE_ERROR(EssentialPole);
SUPERWEYL_DEFINE_ERROR(IndexOutOfRange);
SUPERWEYL_DEFINE_ERROR(NonDivisibleByH);
SUPERWEYL_DEFINE_ERROR(MixedParity);
SUPERWEYL_DEFINE_ERROR(ZeroScale);
SUPERWEYL_DEFINE_ERROR(NotACocycle);
SUPERWEYL_DEFINE_ERROR(NoIsomorphismFound);
SUPERWEYL_DEFINE_ERROR(UnknownGenerator);
SUPERWEYL_DEFINE_ERROR(ParameterConstraintViolated);
SUPERWEYL_DEFINE_ERROR(NonCommutativeCoefficients);
SUPERWEYL_DEFINE_ERROR(ParseError);

#undef SUPERWEYL_DEFINE_ERROR

}  // namespace superweyl
