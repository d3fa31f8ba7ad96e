#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tork {

// Arbitrary-precision rational, always kept canonical (lowest terms, positive
// denominator, zero is 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text or
// a zero denominator.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace tork
