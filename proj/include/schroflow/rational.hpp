#pragma once

#include <gmpxx.h>

#include <string>

namespace schroflow {

using BigInt = mpz_class;
using Rat = mpq_class;

// Parses "p/q", a plain integer, or a terminating decimal ("2.5" -> 5/2).
// Throws ParseError on malformed input or zero denominator.
Rat rat_from_string(const std::string& text);

std::string rat_to_string(const Rat& q);

// base^e for any integer e (negative exponents invert; base must be nonzero).
Rat rat_pow(const Rat& base, long e);

// Natural log of |q| computed from the limb representation; safe for values
// far outside double range. Returns -inf for q == 0.
double log_abs(const Rat& q);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

}  // namespace schroflow
