#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperball {

enum class ErrorKind {
  SingularMatrix,
  NonFiniteInput,
  NotRealizable,
  DivisionByZero,
  NotProperPoint,
  NotPlanePole,
  ArgumentBelowOne,
  PlanesIntersect,
  FamilyMismatch,
  UnsupportedFamily,
  VertexNotTruncated,
  NegativeHeight,
  EmptyAdmissibleSet,
  ParseError,
  CountMismatch,
  MissingParameter,
  RuleMissing,
  UnboundGenerator,
  InvalidSymbol,
  UnknownSeries,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NonFiniteInput: return "NonFiniteInput";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotProperPoint: return "NotProperPoint";
    case ErrorKind::NotPlanePole: return "NotPlanePole";
    case ErrorKind::ArgumentBelowOne: return "ArgumentBelowOne";
    case ErrorKind::PlanesIntersect: return "PlanesIntersect";
    case ErrorKind::FamilyMismatch: return "FamilyMismatch";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::VertexNotTruncated: return "VertexNotTruncated";
    case ErrorKind::NegativeHeight: return "NegativeHeight";
    case ErrorKind::EmptyAdmissibleSet: return "EmptyAdmissibleSet";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CountMismatch: return "CountMismatch";
    case ErrorKind::MissingParameter: return "MissingParameter";
    case ErrorKind::RuleMissing: return "RuleMissing";
    case ErrorKind::UnboundGenerator: return "UnboundGenerator";
    case ErrorKind::InvalidSymbol: return "InvalidSymbol";
    case ErrorKind::UnknownSeries: return "UnknownSeries";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hyperball
