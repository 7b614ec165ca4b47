#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace ghk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 100 decimal digits of working precision for ratios and limits.
using Real = boost::multiprecision::cpp_bin_float_100;

/// Raised when an operation is called outside its stated domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses a decimal integer (optional leading '-'). Throws PreconditionError
/// naming the token when it is not a well-formed integer.
BigInt parse_bigint(std::string_view token);

/// Like parse_bigint but requires the value to fit in int64_t.
std::int64_t parse_int(std::string_view token);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

/// Decimal rendering with `digits` significant digits.
std::string to_string(const Real& value, int digits = 40);

std::int64_t to_int64(const BigInt& value);

}  // namespace ghk
