#pragma once

#include <stdexcept>
#include <string>

namespace rmrank {

// Base of every library error. Catch this to handle anything thrown here.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define RMRANK_DEFINE_ERROR(Name)                                                              \
    class Name : public Error {                                                                \
      public:                                                                                  \
        Name() : Error(#Name) {}                                                               \
        explicit Name(const std::string& what) : Error(std::string(#Name) + ": " + what) {}    \
    }

// Scalar arithmetic
RMRANK_DEFINE_ERROR(DivisionByZero);
RMRANK_DEFINE_ERROR(FieldMismatch);
RMRANK_DEFINE_ERROR(NotPrime);
RMRANK_DEFINE_ERROR(ParseError);

// Tower construction and algebra
RMRANK_DEFINE_ERROR(NonCoprimeShape);
RMRANK_DEFINE_ERROR(NoIrreducibleFound);
RMRANK_DEFINE_ERROR(DependentRadicands);
RMRANK_DEFINE_ERROR(ReducibleArtinSchreier);
RMRANK_DEFINE_ERROR(DependentExtensions);
RMRANK_DEFINE_ERROR(ZeroInverse);
RMRANK_DEFINE_ERROR(DegenerateTraceForm);
RMRANK_DEFINE_ERROR(TowerMismatch);

// Group index bookkeeping
RMRANK_DEFINE_ERROR(OutOfRange);
RMRANK_DEFINE_ERROR(ShapeMismatch);

// Code construction
RMRANK_DEFINE_ERROR(InvalidShape);
RMRANK_DEFINE_ERROR(OrderOutOfRange);
RMRANK_DEFINE_ERROR(LengthMismatch);
RMRANK_DEFINE_ERROR(NotBinaryShape);

// Decoders
RMRANK_DEFINE_ERROR(NoCaseMatched);
RMRANK_DEFINE_ERROR(SingularCofactor);
RMRANK_DEFINE_ERROR(DecodingFailure);
RMRANK_DEFINE_ERROR(CofactorSearchExhausted);
RMRANK_DEFINE_ERROR(OddDimension);
RMRANK_DEFINE_ERROR(AssumptionViolated);
RMRANK_DEFINE_ERROR(RankDeficientSystem);

RMRANK_DEFINE_ERROR(InternalError);

#undef RMRANK_DEFINE_ERROR

}  // namespace rmrank
