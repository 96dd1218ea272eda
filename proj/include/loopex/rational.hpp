#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace loopex {

// GMP keeps mpq_class canonical: gcd(|num|, den) = 1 and den >= 1.
using Integer = mpz_class;
using Rational = mpq_class;

// "num/den", always with an explicit denominator.
std::string to_canonical_string(const Rational& r);
// "3", "-1/2": integers without the denominator.
std::string to_pretty_string(const Rational& r);
// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);

// num/den reduced; den must be nonzero.
Rational make_rational(long num, long den);

bool is_integer(const Rational& r);
Rational rational_pow(const Rational& base, unsigned exponent);
Integer factorial(unsigned n);

}  // namespace loopex
