#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ttp {

// GMP keeps mpq_class canonical after every arithmetic operation; values
// built from text go through parse_rational, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses an optionally signed decimal integer or `p/q`.
Rational parse_rational(std::string_view text);

/// `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

double to_double(const Rational& value);

/// Exact binary value of a finite double.
Rational from_double(double value);

}  // namespace ttp
