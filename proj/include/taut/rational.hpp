#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace taut {

/// Exact arbitrary-precision rational. All slope arithmetic runs on this.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// num/den with the sign moved to the numerator. Throws std::invalid_argument
/// when den is zero.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses `p/q` or `p` (optional leading sign, surrounding spaces ignored). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Formats as `p/q`, or `p` when the denominator is 1.
std::string format_rational(const Rational& value);

}  // namespace taut
