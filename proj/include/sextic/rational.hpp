#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace sextic {

/// Exact rational number; GMP keeps every value canonical (lowest terms,
/// positive denominator), so `==` is value equality.
using Rational = mpq_class;

/// Parses an exact literal: integers, fractions `p/q`, and decimals with an
/// optional exponent (`0.1`, `-2.5e-3`). Returns nullopt on malformed input
/// or a zero denominator. Decimals are converted without rounding.
std::optional<Rational> parse_rational(std::string_view text);

/// Integer when the denominator is 1, otherwise `p/q`.
std::string to_string(const Rational& value);

}  // namespace sextic
