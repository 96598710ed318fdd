#pragma once

#include <stdexcept>
#include <string>

namespace qcurve {

enum class ErrorKind {
  DivisionByZero,
  MixedRadicands,
  NotRepresentable,
  ParseError,
  InconsistentSamples,
  DivergentEndpoint,
  ConstraintViolated,
  NotDegreeTwo,
  NonSimpleRamification,
  ConjugationNotFound,
  UnsupportedRootField,
  TruncationInsufficient,
  NotSigmaInvariant,
  BranchAmbiguity,
  ResidualLogSymbol,
  UnknownCurve,
  UnknownLabel,
  PoleOfFormula,
  InvalidArgument,
};

const char* error_kind_name(ErrorKind k);

/// Single exception type for the library; `kind()` tells the failure apart.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qcurve
