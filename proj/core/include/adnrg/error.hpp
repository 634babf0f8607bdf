#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adnrg {

/// Failure categories surfaced by every module. The CLI maps these onto exit codes.
enum class ErrorCode {
  DimensionMismatch,
  EmptyInput,
  InvalidArgument,
  OutOfBox,
  OracleCapExceeded,
  BudgetExceeded,
  ToleranceUnachievable,
  NotDownset,
  Parse,
  Io,
  UnknownExperiment,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }
  /// The message without the category prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace adnrg
