#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace tropnet {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator (guaranteed by cpp_rational).
using Rational = boost::multiprecision::cpp_rational;

/// Parses "n" or "n/d" with optional leading sign. Throws MalformedInputError.
Rational parse_rational(const std::string& text);

/// Formats as "n" or "n/d" (denominator printed only when != 1).
std::string format_rational(const Rational& q);

}  // namespace tropnet
