#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qdc {

using Rational = mpq_class;

/// Parses "p/q" or an integer string; decimals and exponents are rejected.
/// Throws InputError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" or "p" text; inverse of parse_rational.
std::string format_rational(const Rational& value);

}  // namespace qdc
