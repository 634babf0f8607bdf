#pragma once

#include <cstdint>
#include <string>

#include "adnrg/error.hpp"

namespace adnrg::detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* what) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::InvalidArgument, std::string("integer overflow in ") + what);
  }
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::InvalidArgument, std::string("integer overflow in ") + what);
  }
  return out;
}

}  // namespace adnrg::detail
