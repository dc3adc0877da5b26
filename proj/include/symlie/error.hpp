#pragma once

#include <stdexcept>
#include <string>

namespace symlie {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  FieldMismatch,
  DimensionMismatch,
  Singular,
  NotAnEigenvector,
  EigenvaluesNotInField,
  BudgetExceeded,
};

/// Every failure raised by the library carries one of the codes above so the
/// C layer can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code) noexcept;

}  // namespace symlie
