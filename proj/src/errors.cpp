#include "mdcalc/errors.hpp"

namespace mdcalc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::BadVariableIndex: return "BadVariableIndex";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::FloorViolation: return "FloorViolation";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::InsufficientFloor: return "InsufficientFloor";
    case ErrorKind::NotSelfAdjoint: return "NotSelfAdjoint";
    case ErrorKind::BadPrincipalSymbol: return "BadPrincipalSymbol";
    case ErrorKind::NonComposable: return "NonComposable";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Error";
}

}  // namespace mdcalc
