// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "edgenorm/exponent_vector.hpp"
#include "edgenorm/rational.hpp"

namespace edgenorm {

/// A monomial x^a on the path 1-2-...-n together with a fractional edge
/// packing y (y[i] sits on edge {i+1, i+2}) satisfying
///   y_1 <= a_1,  y_{i-1} + y_i <= a_i,  y_{n-1} <= a_n.
struct PathInstance {
  ExponentVector a;
  std::vector<Rational> y;

  std::size_t num_vertices() const { return a.size(); }
};

/// Edge multiset on the path: left endpoint (1-based) -> multiplicity.
using PathCover = std::map<int, Exponent>;

Exponent cover_size(const PathCover& cover);

/// sum of incidence vectors of the cover, as an exponent vector of length n.
ExponentVector cover_incidence(const PathCover& cover, std::size_t n);

enum class SegmentRule {
  AlternatingCapped,  // b_j >= 0 inside, last vertex capped: a_last <= b_{last-1}
  AlternatingFull,    // b_j >= 0 up to and including the last vertex
  Paired,             // even length, a_{2i-1} >= a_{2i}
  PairedWithTail,     // odd length >= 3, pairs then one unmatched vertex
  LoneVertex,         // single trailing vertex, contributes nothing
};

/// One block of the left-to-right decomposition. Vertices are 1-based and
/// inclusive. For the alternating rules `alternating` holds the block's
/// alternating sums b_1 = a_first, b_j = a_j - b_{j-1}, up to the last
/// non-negative one (all of them for AlternatingFull, all but the capped
/// vertex for AlternatingCapped).
struct Segment {
  int first = 0;
  int last = 0;
  SegmentRule rule = SegmentRule::LoneVertex;
  std::vector<Exponent> alternating;
};

/// Splits 1..n into blocks, cutting as far left as the rules allow.
std::vector<Segment> decompose_path(const ExponentVector& a);

/// Description of the first violated constraint (shape, y >= 0, then the
/// vertex inequalities in order), or nullopt when the instance is feasible.
std::optional<std::string> first_violation(const PathInstance& inst);

/// A multiset of path edges whose product divides x^a and whose size is at
/// least ceil(sum(y)). Throws PreconditionError on an infeasible instance.
PathCover extract_cover(const PathInstance& inst);

}  // namespace edgenorm
