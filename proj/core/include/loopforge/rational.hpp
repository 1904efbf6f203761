#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace loopforge {

// Exact arithmetic over Q. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the invariant the rest of the code
// relies on for decidable equality.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws ParseError.
Rational parse_rational(const std::string& text);

// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

}  // namespace loopforge
