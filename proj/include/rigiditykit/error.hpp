#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rigiditykit {

enum class ErrorCode {
  GcdOfZeros,
  RadicalOfZero,
  RootCountOfZero,
  DivisionByZero,
  ZeroEntry,
  ExponentOverflow,
  NotUnivariate,
  TooFewTerms,
  SubsetCapExceeded,
  SumNotNonzeroConstant,
  InvalidTerm,
  SharedVariable,
  ConstantTerm,
  NotApplicable,
  DegenerateData,
  InvalidData,
  BadSubstitution,
  UnknownVariable,
  SyntaxError,
  ExponentOutOfRange,
  SchemaError,
  IoError,
  SearchBudgetExceeded,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Every recoverable failure in the library is reported with one of these.
/// `what()` is "<CodeName>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace rigiditykit
