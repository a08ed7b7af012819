#pragma once

#include <gmpxx.h>

#include <string>

namespace tddel {

// Exact arbitrary-precision rational.  All geometric predicates and the
// linear solver are equality-sensitive, so nothing in this project ever
// touches floating point.
using Rational = mpq_class;

// Parses "p/q" or the integer shorthand "p"; the result is canonicalized.
// Throws InputError on anything else (including a zero denominator).
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rational& value);

} // namespace tddel
