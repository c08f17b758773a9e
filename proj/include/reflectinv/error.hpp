#pragma once

#include <stdexcept>
#include <string>

namespace reflectinv {

enum class ErrorKind {
  ParseError,
  DivisionByZero,
  DimensionMismatch,
  NotSquare,
  Singular,
  SingularGenerator,
  CapExceeded,
  NotAHomomorphism,
  GeneratorCountMismatch,
  NonUnitConstantTerm,
  NonIntegralCoefficient,
  NonTerminatingNumerator,
  MethodDisagreement,
  NoSuchDegrees,
  NotOneDimensional,
  FreenessViolation,
  ZeroVector,
  UnknownCatalogName,
  UnknownRepresentation,
  InvalidInput,
  Internal,
};

const char* kind_name(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so that
/// front ends can map it to a diagnostic name and an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace reflectinv
