#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace pbrp {

// All money and utility quantities are exact rationals. Comparisons around
// zero excess decide feasibility, so nothing here may round.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q" or "p" with optional sign; q must be positive after
// normalisation. Throws Error(ParseError) on anything else.
Rational parse_rational(const std::string& text);

// Canonical form, always with an explicit denominator ("5/1", "-2/3").
std::string format_rational(const Rational& r);

// Fixed-point decimal with `places` fractional digits, ties away from zero.
// Computed on the exact rational; no floating point involved.
std::string format_decimal(const Rational& r, int places);

BigInt rational_floor(const Rational& r);
BigInt rational_ceil(const Rational& r);

// Nearest multiple of 1/denom; ties round away from zero.
Rational round_to_denominator(const Rational& r, std::int64_t denom);
Rational ceil_to_denominator(const Rational& r, std::int64_t denom);
Rational floor_to_denominator(const Rational& r, std::int64_t denom);

std::int64_t to_int64_checked(const BigInt& v, const std::string& what);

double to_double(const Rational& r);

}  // namespace pbrp
