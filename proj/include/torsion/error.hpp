#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torsion {

enum class ErrorKind {
  // arithmetic
  DivisionByZero,
  FieldMismatch,
  UnsupportedField,
  ZeroPolynomial,
  BothZero,
  BadInitialValue,
  CharDividesD,
  // curves and certificates
  BadParameters,
  NotOnCurve,
  RamifiedPoint,
  NotRamified,
  NotSquarefree,
  NegativeSlack,
  WrongQDegree,
  QVanishesAtA,
  SlackNotZero,
  SlackNotOne,
  CharDividesEll0,
  CharDividesM0,
  ZeroParameter,
  NotNormalized,
  // oracles
  PrecisionExhausted,
  SingularCurve,
  // elliptic_four
  Degenerate,
  DegenerateB,
  CharTwo,
  // two_packet
  NoRootOfUnityStructure,
  NoSquareRoot,
  WrongDegree,
  ExcludedLambda,
  DegenerateFactor,
  LinearlyDependent,
  Lem1Violation,
  SameAbscissa,
  // io
  SchemaViolation,
};

std::string_view to_string(ErrorKind kind);

// True for errors caused by malformed input rather than a failed mathematical check.
bool is_usage_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace torsion
