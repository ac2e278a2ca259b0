#pragma once

#include <gmpxx.h>

#include <string>

namespace qumbral {

// Exact arbitrary-precision integers and rationals.  BigRat values are kept
// canonical by GMP: positive denominator, gcd(|num|, den) = 1.
using BigInt = mpz_class;
using BigRat = mpq_class;

// Reads "p" or "p/q" (optional leading '-', decimal digits, q > 0) and
// returns the reduced rational.  Throws ParseError on anything else.
BigRat bigrat_from_string(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q", lowest terms.
std::string to_string(const BigRat& value);

}  // namespace qumbral
