#pragma once

#include <stdexcept>
#include <string>

namespace circlehilb {

// Validation-class failures (bad input, unmet preconditions) derive from
// ValidationError; engine bugs derive from InternalError.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + (detail.empty() ? "" : ": " + detail)),
        kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

#define CIRCLEHILB_DEFINE_ERROR(Name, Base)                                  \
  class Name : public Base {                                                \
   public:                                                                  \
    explicit Name(const std::string& detail = {}) : Base(#Name, detail) {} \
  };

CIRCLEHILB_DEFINE_ERROR(ZeroDenominator, ValidationError)
CIRCLEHILB_DEFINE_ERROR(PoleAtZero, ValidationError)
CIRCLEHILB_DEFINE_ERROR(ZeroFunction, ValidationError)
CIRCLEHILB_DEFINE_ERROR(ParseError, ValidationError)
CIRCLEHILB_DEFINE_ERROR(NonInvertibleDenominator, ValidationError)
CIRCLEHILB_DEFINE_ERROR(NotCoprime, ValidationError)
CIRCLEHILB_DEFINE_ERROR(Unstable, ValidationError)
CIRCLEHILB_DEFINE_ERROR(Empty, ValidationError)
CIRCLEHILB_DEFINE_ERROR(NotGeneric, ValidationError)
CIRCLEHILB_DEFINE_ERROR(DegreeOverflow, ValidationError)
CIRCLEHILB_DEFINE_ERROR(RepeatedVariables, ValidationError)
CIRCLEHILB_DEFINE_ERROR(ZeroBase, ValidationError)
CIRCLEHILB_DEFINE_ERROR(CombinatorialExplosion, ValidationError)
CIRCLEHILB_DEFINE_ERROR(OutOfRange, ValidationError)
CIRCLEHILB_DEFINE_ERROR(InvalidArgument, ValidationError)
CIRCLEHILB_DEFINE_ERROR(CountOverflow, ValidationError)
CIRCLEHILB_DEFINE_ERROR(InternalInvariantViolation, InternalError)
CIRCLEHILB_DEFINE_ERROR(OracleMismatch, InternalError)

#undef CIRCLEHILB_DEFINE_ERROR

}  // namespace circlehilb
