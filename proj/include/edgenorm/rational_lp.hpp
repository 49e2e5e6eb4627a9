// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "edgenorm/exponent_vector.hpp"
#include "edgenorm/monomial_ideal.hpp"
#include "edgenorm/rational.hpp"

namespace edgenorm {

/// A feasible point y >= 0 of M*y <= a together with its objective sum(y).
/// Produced by the membership oracles below and re-checked before return.
struct MembershipCertificate {
  std::vector<Rational> y;
  Rational value;
  bool integral = false;

  friend bool operator==(const MembershipCertificate&, const MembershipCertificate&) = default;
};

/// max sum(y) s.t. M*y <= a, y >= 0 over the rationals, M the exponent matrix
/// of `ideal`. x^a lies in the integral closure of I^k iff value >= k.
MembershipCertificate vstar(const MonomialIdeal& ideal, const ExponentVector& a);

/// Same program over y in Z_+^m, by best-bound branch and bound.
/// x^a lies in I^k iff value >= k.
MembershipCertificate v_int(const MonomialIdeal& ideal, const ExponentVector& a);

/// Exhaustive enumeration of the integer program. Slow; used to cross-check
/// v_int.
MembershipCertificate v_int_enumerate(const MonomialIdeal& ideal, const ExponentVector& a);

/// True iff cert satisfies y >= 0, M*y <= a, value == sum(y), and y is
/// integral when flagged so. Never throws.
bool verify_certificate(const MonomialIdeal& ideal, const ExponentVector& a,
                        const MembershipCertificate& cert);

namespace lp {

/// Dense row-major constraint matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;

  Rational& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

struct Solution {
  Rational value;
  std::vector<Rational> x;
};

/// max sum(x) s.t. A*x <= b, x >= 0, for b >= 0 (so x = 0 is feasible).
/// Tableau simplex with Bland's rule; throws PreconditionError if b has a
/// negative entry or the program is unbounded.
Solution maximize_sum(const Matrix& a, const std::vector<Rational>& b);

}  // namespace lp

}  // namespace edgenorm
