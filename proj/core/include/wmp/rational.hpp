#pragma once

#include <gmpxx.h>
#include <string>

namespace wmp {

// Exact rational scalar. mpq_class keeps gcd(num,den)=1 and den>0 after
// arithmetic, but not after piecewise construction, so all construction goes
// through make_rational which canonicalizes.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational rational_from_string(const std::string& s);

// "p" when den==1, else "p/q".
std::string rational_to_string(const Rational& r);

bool is_integer(const Rational& r);

// gcd of numerators / lcm of denominators; content(0)=0. For a list of
// rationals c_i, content divides every c_i with integer quotient.
Rational rational_content(const Rational& a, const Rational& b);

} // namespace wmp
