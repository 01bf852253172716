#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace visidim {

/// Arbitrary precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Parses "p/q", "p" or a finite decimal such as "-0.125" exactly.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// a - m * floor(a / m), for m > 0.
Rational floor_mod(const Rational& a, const Rational& m);

Rational floor(const Rational& q);

/// Exact value of a finite binary64.
Rational from_double(double v);

/// Largest binary64 not above q, and smallest not below q.
double round_down(const Rational& q);
double round_up(const Rational& q);

}  // namespace visidim
