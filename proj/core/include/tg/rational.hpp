#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tg {

/// Exact arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

/// num/den in lowest terms. Throws InvalidInput when den == 0.
Rational fraction(long num, long den);

/// Canonical "num/den" form. Integers are written with an explicit "/1".
std::string to_string(const Rational& q);

/// Accepts "num/den" or a bare integer, with an optional leading sign.
/// Throws InvalidInput on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

/// Nearest double; display only.
double to_double(const Rational& q);

/// Decimal rendering for human-readable output, e.g. "1.0" or "1.5".
std::string to_decimal(const Rational& q);

}  // namespace tg
