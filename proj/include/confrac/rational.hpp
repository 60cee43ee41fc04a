#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace confrac {

/// Exact rational scalar. GMP keeps mpq_class values canonical after every
/// arithmetic operation (positive denominator, reduced fraction).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional leading sign). Throws MalformedInput.
Rational parse_rational(std::string_view text);

/// Canonical string: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Rational pow(const Rational& base, unsigned exponent);

Integer factorial(unsigned n);

/// n!! with the conventions (-1)!! = 0!! = 1.
Integer double_factorial(int n);

bool has_odd_denominator(const Rational& value);

/// Throws DomainError unless 0 < alpha <= 1.
void require_valid_alpha(const Rational& alpha);

/// Real value of base^exponent. A negative base is accepted only when the
/// exponent's denominator is odd (real odd root); otherwise DomainError.
double real_power(double base, const Rational& exponent);

/// base^exponent as an exact rational when one exists (perfect roots only).
std::optional<Rational> exact_power(const Rational& base, const Rational& exponent);

} // namespace confrac
