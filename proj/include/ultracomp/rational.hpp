#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ultracomp {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational arithmetic. Rewards and thresholds are rationals so that
// strict reward comparisons are decided without any rounding.
using Rational = boost::multiprecision::cpp_rational;
using Reward = Rational;

// Parses "p/q", an optionally signed integer, or a decimal literal such as
// "-3.25" (converted exactly, never through floating point).
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// Lowest-terms form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& value);

// -1, 0 or +1.
int rational_sign(const Rational& value);

}  // namespace ultracomp
