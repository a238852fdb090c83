#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kls {

enum class ErrorKind {
  // input / parsing
  ParseError,
  // poset construction
  CycleDetected,
  RankAxiomViolation,
  MissingRank,
  NotComparable,
  UnknownElement,
  // incidence algebra
  PosetMismatch,
  NotInvertible,
  DegreeExceedsRank,
  // KLS engine
  NotAKernel,
  NotInHalfSubring,
  NotSymmetric,
  NotAlternating,
  Unsolvable,
  AntisymmetryFailure,
  // zoo
  NotPrime,
  DimensionMismatch,
  NotGraded,
  NotEulerian,
  TooLarge,
  NotAFlat,
  FieldTooLarge,
  NonPolynomialResult,
  InvalidArgument,
  InternalAssertion,
};

std::string_view to_string(ErrorKind kind);

/// Whether an error signals a broken internal invariant rather than bad input.
bool is_internal(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kls
