#include "hopfmon/error.hpp"

namespace hopfmon {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero:
      return "DivisionByZero";
    case ErrorCode::FieldMismatch:
      return "FieldMismatch";
    case ErrorCode::SignatureMismatch:
      return "SignatureMismatch";
    case ErrorCode::NotAnAlgebra:
      return "NotAnAlgebra";
    case ErrorCode::NotInvertible:
      return "NotInvertible";
    case ErrorCode::MalformedPresentation:
      return "MalformedPresentation";
    case ErrorCode::NotAGeneratingMatrix:
      return "NotAGeneratingMatrix";
    case ErrorCode::InvariantViolation:
      return "InvariantViolation";
    case ErrorCode::NotQuasitriangular:
      return "NotQuasitriangular";
    case ErrorCode::NotAModuleAction:
      return "NotAModuleAction";
    case ErrorCode::BadExtension:
      return "BadExtension";
    case ErrorCode::NotApplicable:
      return "NotApplicable";
    case ErrorCode::ConventionError:
      return "ConventionError";
    case ErrorCode::BudgetExceeded:
      return "BudgetExceeded";
  }
  return "UnknownError";
}

}  // namespace hopfmon
