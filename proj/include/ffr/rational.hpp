// Exact rational scalars and small helpers shared by every module.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace ffr {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "7", "-3/4", "0" into a canonical rational.
// Returns nullopt for malformed text or a zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

// "num/den", or just "num" when the denominator is 1.
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

// Every finite double is an exact binary rational.
Rational rational_from_double(double x);

// n! as an exact integer.
Integer factorial(unsigned long n);

// binom(n, k) for integer n >= 0.
Rational binomial(unsigned long n, unsigned long k);

// sqrt(r) when r is the square of a rational, nullopt otherwise. r >= 0 required.
std::optional<Rational> exact_sqrt(const Rational& r);

// Sign of q - (a + b*sqrt(s)) for rational q, a, b and s >= 0,
// computed exactly in the quadratic extension.
int compare_with_surd(const Rational& q, const Rational& a, const Rational& b,
                      const Rational& s);

}  // namespace ffr
