#pragma once

#include <gmpxx.h>

#include <string>

namespace graphfp {

// Exact rational scalar used throughout the combinatorial side of the
// library. Backed by GMP so weights, traces and cumulants never round.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p", "p/q" (arbitrary precision) into canonical form.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical "p/q" rendering ("p" when the denominator is 1).
std::string to_string(const Rational& q);

double to_double(const Rational& q);

}  // namespace graphfp
