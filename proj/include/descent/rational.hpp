#pragma once

#include <gmpxx.h>
#include <string>

namespace descent {

// mpq_class keeps numerator and denominator coprime with a positive
// denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "n" or "n/d" with d > 0; anything else throws ParseError.
Rational parse_rational(const std::string& text, const std::string& where = "");
std::string to_string(const Rational& q);

Integer lcm_denominators(const Rational* begin, const Rational* end);

} // namespace descent
