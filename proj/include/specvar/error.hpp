#pragma once

#include <stdexcept>
#include <string>

namespace specvar {

// Every failure raised by the library derives from Error so callers can
// catch the family while still distinguishing the kind.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SPECVAR_DEFINE_ERROR(Name)              \
  class Name : public Error {                   \
   public:                                      \
    explicit Name(const std::string& what_arg)  \
        : Error(#Name ": " + what_arg) {}       \
  };

SPECVAR_DEFINE_ERROR(InvalidMatrix)
SPECVAR_DEFINE_ERROR(SolverFailure)
SPECVAR_DEFINE_ERROR(DegenerateInput)
SPECVAR_DEFINE_ERROR(OutOfDomain)
SPECVAR_DEFINE_ERROR(DomainOverflow)
SPECVAR_DEFINE_ERROR(PoleEvaluation)
SPECVAR_DEFINE_ERROR(InvalidSpectrum)
SPECVAR_DEFINE_ERROR(NotAContraction)
SPECVAR_DEFINE_ERROR(SizeMismatch)
SPECVAR_DEFINE_ERROR(InvalidInputs)
SPECVAR_DEFINE_ERROR(CurveResolutionFailure)
SPECVAR_DEFINE_ERROR(ConfigError)
SPECVAR_DEFINE_ERROR(ParseError)

#undef SPECVAR_DEFINE_ERROR

}  // namespace specvar
