#pragma once

#include <gmpxx.h>

#include <string>

namespace ssmthom {

// Exact rational coefficients. GMP's mpq_class keeps fractions reduced with a
// positive denominator after arithmetic; construction paths below enforce the
// same invariant for values built from raw integers or text.
using Integer = mpz_class;
using Rational = mpq_class;

Rational rational(long num, long den = 1);
Rational rational_from_integer(const Integer& num);

// Accepts "p", "-p", "p/q" with q > 0 after reduction; rejects "1/0",
// whitespace, empty strings and stray characters.
Rational parse_rational(const std::string& text);

// Reduced form, "p/q" or plain "p" when q == 1. parse_rational round-trips.
std::string rational_str(const Rational& value);
std::string integer_str(const Integer& value);

bool is_integer(const Rational& value);
Integer numerator(const Rational& value);
Integer denominator(const Rational& value);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace ssmthom
