#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tautcalc {

// Exact rationals everywhere; GMP keeps them canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Formats as "p/q" in lowest terms; integers come out as "p/1".
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q"; throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace tautcalc
