#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace pwedge {

// Exact arbitrary-precision rational scalar.  Everything in this library is
// computed over the rationals; there is no floating-point mode.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

// Parses "p", "-p", or "p/q" with q a positive integer.  Returns nullopt on
// malformed input, including a zero denominator.  The result is always in
// lowest terms with a positive denominator.
std::optional<Rational> parse_rational(std::string_view text);

// Canonical "p/q" (or plain integer) form; parse_rational round-trips it.
std::string format_rational(const Rational& value);

}  // namespace pwedge
