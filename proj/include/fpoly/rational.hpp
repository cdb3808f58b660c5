#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace fpoly {

/// Exact rational number. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading sign). Throws std::invalid_argument
/// on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" when the value is an
/// integer. parse_rational(to_string(r)) == r.
std::string to_string(const Rational& value);

/// Decimal approximation for display only.
std::string to_decimal_string(const Rational& value, int digits = 4);

mpz_class ceil(const Rational& value);
mpz_class floor(const Rational& value);

/// Ceiling of a non-negative rational as a machine integer.
std::uint64_t ceil_natural(const Rational& value);

Rational max_of(std::span<const Rational> values);

}  // namespace fpoly
