#include "adnrg/error.hpp"

namespace adnrg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::EmptyInput: return "empty_input";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::OutOfBox: return "out_of_box";
    case ErrorCode::OracleCapExceeded: return "oracle_cap_exceeded";
    case ErrorCode::BudgetExceeded: return "budget_exceeded";
    case ErrorCode::ToleranceUnachievable: return "tolerance_unachievable";
    case ErrorCode::NotDownset: return "not_downset";
    case ErrorCode::Parse: return "parse_error";
    case ErrorCode::Io: return "io_error";
    case ErrorCode::UnknownExperiment: return "unknown_experiment";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

}  // namespace adnrg
