#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cyclo {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Integer& z) { return sgn(z); }
inline int sign(const Rational& q) { return sgn(q); }

/// Builds a/b in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "a", "a/b", or a finite decimal such as "-1.25" into an exact rational.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& z);
/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

Integer from_u64(std::uint64_t v);

/// Correctly rounded decimal text with `sig` significant digits for a real number known
/// to lie in [lo, hi]. Returns nullopt when the two endpoints round differently, in which
/// case the enclosure must be tightened first. Zero is printed as "0".
std::optional<std::string> format_significant(const Rational& lo, const Rational& hi, int sig);

/// Same as format_significant but with a fixed number of digits after the decimal point.
std::optional<std::string> format_fixed(const Rational& lo, const Rational& hi, int decimals);

/// Exact value with `sig` significant digits, rounding half away from zero.
std::string format_significant(const Rational& x, int sig);

}  // namespace cyclo
