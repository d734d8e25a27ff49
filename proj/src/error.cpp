#include "torsion/error.hpp"

namespace torsion {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::BadInitialValue: return "BadInitialValue";
    case ErrorKind::CharDividesD: return "CharDividesD";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::NotOnCurve: return "NotOnCurve";
    case ErrorKind::RamifiedPoint: return "RamifiedPoint";
    case ErrorKind::NotRamified: return "NotRamified";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::NegativeSlack: return "NegativeSlack";
    case ErrorKind::WrongQDegree: return "WrongQDegree";
    case ErrorKind::QVanishesAtA: return "QVanishesAtA";
    case ErrorKind::SlackNotZero: return "SlackNotZero";
    case ErrorKind::SlackNotOne: return "SlackNotOne";
    case ErrorKind::CharDividesEll0: return "CharDividesEll0";
    case ErrorKind::CharDividesM0: return "CharDividesM0";
    case ErrorKind::ZeroParameter: return "ZeroParameter";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::DegenerateB: return "DegenerateB";
    case ErrorKind::CharTwo: return "CharTwo";
    case ErrorKind::NoRootOfUnityStructure: return "NoRootOfUnityStructure";
    case ErrorKind::NoSquareRoot: return "NoSquareRoot";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::ExcludedLambda: return "ExcludedLambda";
    case ErrorKind::DegenerateFactor: return "DegenerateFactor";
    case ErrorKind::LinearlyDependent: return "LinearlyDependent";
    case ErrorKind::Lem1Violation: return "Lem1Violation";
    case ErrorKind::SameAbscissa: return "SameAbscissa";
    case ErrorKind::SchemaViolation: return "SchemaViolation";
  }
  return "Unknown";
}

bool is_usage_error(ErrorKind kind) {
  return kind == ErrorKind::SchemaViolation || kind == ErrorKind::BadParameters ||
         kind == ErrorKind::FieldMismatch;
}

}  // namespace torsion
