#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace adnrg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" with q omitted when it is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);
Rational parse_rational(const std::string& text);

double to_double(const Rational& r);

/// %.12g formatting used by every serialized floating-point value.
std::string format_double(double x);

}  // namespace adnrg
