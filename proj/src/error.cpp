#include "kls/error.hpp"

namespace kls {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::RankAxiomViolation: return "RankAxiomViolation";
    case ErrorKind::MissingRank: return "MissingRank";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::PosetMismatch: return "PosetMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DegreeExceedsRank: return "DegreeExceedsRank";
    case ErrorKind::NotAKernel: return "NotAKernel";
    case ErrorKind::NotInHalfSubring: return "NotInHalfSubring";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::Unsolvable: return "Unsolvable";
    case ErrorKind::AntisymmetryFailure: return "AntisymmetryFailure";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::NotEulerian: return "NotEulerian";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAFlat: return "NotAFlat";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::NonPolynomialResult: return "NonPolynomialResult";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InternalAssertion: return "InternalAssertion";
  }
  return "Unknown";
}

bool is_internal(ErrorKind kind) {
  return kind == ErrorKind::AntisymmetryFailure || kind == ErrorKind::NonPolynomialResult ||
         kind == ErrorKind::InternalAssertion;
}

}  // namespace kls
