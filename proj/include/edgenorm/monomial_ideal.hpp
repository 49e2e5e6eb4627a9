// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "edgenorm/exponent_vector.hpp"

namespace edgenorm {

/// A monomial ideal of K[x_1..x_n], held as its minimal generating antichain.
///
/// Generators are stored in decreasing lexicographic order (x_1 > x_2 > ...),
/// so column i of the exponent matrix is generators()[i]. The empty set is the
/// zero ideal and {0} is the unit ideal; oracles downstream reject both.
class MonomialIdeal {
 public:
  /// Minimalizes `generators`; every vector must have length `n`.
  MonomialIdeal(std::size_t n, std::vector<ExponentVector> generators);

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n, {}); }

  std::size_t ambient_dimension() const noexcept { return n_; }
  const std::vector<ExponentVector>& generators() const noexcept { return generators_; }
  std::size_t num_generators() const noexcept { return generators_.size(); }

  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_unit() const noexcept { return generators_.size() == 1 && generators_.front().is_zero(); }

  /// Throws ZeroIdealError / UnitIdealError for the two degenerate ideals.
  void require_proper() const;

  /// max_i (b_i)_j, the largest exponent of x_j among the generators.
  Exponent max_exponent(std::size_t j) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_;
  std::vector<ExponentVector> generators_;
};

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal);

/// The <=-minimal elements of `generators`, as an ideal of K[x_1..x_n].
MonomialIdeal minimalize(std::size_t n, std::vector<ExponentVector> generators);

/// Minimal elements of a vector set, sorted decreasing lexicographically.
std::vector<ExponentVector> minimal_elements(std::vector<ExponentVector> vectors);

/// True iff some generator divides x^a.
bool member(const MonomialIdeal& ideal, const ExponentVector& a);

MonomialIdeal product(const MonomialIdeal& lhs, const MonomialIdeal& rhs);

/// I^k for k >= 1.
MonomialIdeal power(const MonomialIdeal& ideal, int k);

}  // namespace edgenorm
