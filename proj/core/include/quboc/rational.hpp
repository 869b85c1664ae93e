#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace quboc {

/// Arbitrary-precision signed integer.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. All polynomial coefficients use this type so that
/// penalty constants and energies never suffer rounding.
using Rational = boost::multiprecision::cpp_rational;

/// Renders "n" for integers and "n/d" otherwise.
std::string to_string(const Rational& value);

/// Parses "n", "n/d", or a decimal literal such as "-1.25".
/// Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& text);

/// Nearest double; large magnitudes saturate to +/-inf.
double to_double(const Rational& value);

/// True when the denominator is 1.
bool is_integer(const Rational& value);

/// Floor of the exact quotient.
BigInt floor_div(const BigInt& numerator, const BigInt& denominator);

/// Greatest integer <= value.
BigInt rational_floor(const Rational& value);

/// Least integer >= value.
BigInt rational_ceil(const Rational& value);

}  // namespace quboc
