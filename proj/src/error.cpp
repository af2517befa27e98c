#include "rigiditykit/error.hpp"

namespace rigiditykit {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::GcdOfZeros: return "GcdOfZeros";
    case ErrorCode::RadicalOfZero: return "RadicalOfZero";
    case ErrorCode::RootCountOfZero: return "RootCountOfZero";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroEntry: return "ZeroEntry";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::NotUnivariate: return "NotUnivariate";
    case ErrorCode::TooFewTerms: return "TooFewTerms";
    case ErrorCode::SubsetCapExceeded: return "SubsetCapExceeded";
    case ErrorCode::SumNotNonzeroConstant: return "SumNotNonzeroConstant";
    case ErrorCode::InvalidTerm: return "InvalidTerm";
    case ErrorCode::SharedVariable: return "SharedVariable";
    case ErrorCode::ConstantTerm: return "ConstantTerm";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::DegenerateData: return "DegenerateData";
    case ErrorCode::InvalidData: return "InvalidData";
    case ErrorCode::BadSubstitution: return "BadSubstitution";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace rigiditykit
