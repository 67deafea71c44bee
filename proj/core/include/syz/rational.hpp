#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace syz {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "num/den" or a plain integer "num". Throws std::invalid_argument on
/// malformed text or a zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);

/// Always renders as "num/den" (den = 1 included), the module file convention.
std::string format_rational(const Rational& value);

/// Renders integers without the "/1" suffix.
std::string format_rational_short(const Rational& value);

}  // namespace syz
