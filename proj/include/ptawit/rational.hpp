#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>

namespace ptawit {

// Exact arbitrary-precision rational. All probabilities, thresholds, LP
// coefficients and volumes in this library are of this type; there is no
// floating point anywhere on a computation path. The GMP backend keeps
// values in lowest terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

// Parses "p/q", "p", or a decimal like "0.24" (converted exactly).
// Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

// Canonical textual form "p/q" (denominator always printed, e.g. "1/1").
std::string to_fraction_string(const Rational& r);

// Plain form: "p" when the denominator is 1, "p/q" otherwise.
std::string to_plain_string(const Rational& r);

// Decimal rendering: exact when the expansion terminates ("0.5496"),
// otherwise rounded to six places and prefixed with "~".
std::string to_decimal_string(const Rational& r);

} // namespace ptawit
