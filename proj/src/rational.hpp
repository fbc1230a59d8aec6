#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace midr {

// Exact arbitrary-precision rational. Values are kept canonical (reduced,
// positive denominator) by construction.
using Rational = mpq_class;

/// Builds a canonical rational from numerator/denominator.
Rational make_rational(const mpz_class& num, const mpz_class& den);

/// Parses "p" or "p/q" with decimal digits only (no sign, no whitespace).
/// Returns nullopt on malformed text or zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// Reduced text form: "p/q", or just "p" when the denominator is 1.
std::string rational_text(const Rational& q);

}  // namespace midr
