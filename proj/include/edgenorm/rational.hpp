// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <span>
#include <string>

#include "edgenorm/exponent_vector.hpp"

namespace edgenorm {

/// Arbitrary-precision rational, always canonical (lowest terms, den > 0).
using Rational = mpq_class;
using BigInt = mpz_class;

static_assert(sizeof(long) == sizeof(Exponent), "Exponent must fit a GMP signed long");

inline Rational to_rational(Exponent e) { return Rational(static_cast<long>(e)); }

BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);
bool is_integer(const Rational& q);

/// lcm of the denominators (1 for an empty span).
BigInt denominator_lcm(std::span<const Rational> values);

/// Narrowing to Exponent; throws OverflowError if out of range.
Exponent to_exponent(const BigInt& z);

/// "p/q", or "p" for integers.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q"; throws ParseError on anything else.
Rational parse_rational(const std::string& text);

}  // namespace edgenorm
