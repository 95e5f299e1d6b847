#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hbm {

/// Arbitrary-precision rational; gmpxx keeps every arithmetic result in
/// canonical form (denominator > 0, reduced).
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional sign, decimal digits only). Throws
/// Error(ParseError) on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Renders as "p" or "p/q".
std::string to_string(const Rational& value);

Rational binomial(long n, long k);

}  // namespace hbm
