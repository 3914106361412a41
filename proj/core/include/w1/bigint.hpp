#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace w1 {

using BigInt = boost::multiprecision::cpp_int;

/// Parses a nonnegative decimal string ("0", "12345"). Leading '+' or '-',
/// whitespace, and empty strings are rejected with UsageError.
BigInt parse_decimal(std::string_view text);

inline std::string to_decimal(const BigInt& value) { return value.str(); }

}  // namespace w1
