#pragma once

#include <gmpxx.h>

#include <string>

namespace lucaszeta {

// Exact rationals are GMP's mpq_class: canonical form keeps lowest terms
// with a positive denominator, which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "num", "num/den" or a decimal literal like "-1.25" into an exact
// rational. Throws Error{BadInput} on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical "num/den" form (always includes the denominator).
std::string rational_str(const Rational& value);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// Floor of log2(|value|) for nonzero rationals; used for sizing work.
long rational_log2_floor(const Rational& value);

} // namespace lucaszeta
