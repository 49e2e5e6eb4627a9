// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "edgenorm/exponent_vector.hpp"
#include "edgenorm/limits.hpp"
#include "edgenorm/monomial_ideal.hpp"

namespace edgenorm {

/// Outcome of testing whether I^k equals its integral closure.
struct ClosureReport {
  int k = 1;
  bool closed = true;
  /// Lexicographically smallest minimal generator of the closure of I^k
  /// that is not in I^k; set iff !closed.
  std::optional<ExponentVector> witness;
  /// Minimal generators of the closure of I^k, when requested.
  std::optional<std::vector<ExponentVector>> closure_generators;

  friend bool operator==(const ClosureReport&, const ClosureReport&) = default;
};

/// Exact witness that (x^a)^s lies in I^(s*k):
///   s*a = slack + sum_i multiplicities[i] * b_i,  sum_i multiplicities[i] = s*k.
struct PowerIdentityCertificate {
  Exponent s = 1;
  std::vector<Exponent> multiplicities;  // indexed like ideal.generators()
  ExponentVector slack;

  friend bool operator==(const PowerIdentityCertificate&,
                         const PowerIdentityCertificate&) = default;
};

/// x^a is in the integral closure of I^k (vstar(I, a) >= k).
bool in_closure(const MonomialIdeal& ideal, const ExponentVector& a, int k);

/// Upper corner of the box holding every minimal generator of the closure
/// of I^k: coordinate j is k * max_i (b_i)_j.
ExponentVector closure_box(const MonomialIdeal& ideal, int k);

/// Minimal generators of the closure of I^k, decreasing lexicographic order.
/// Pruned recursive lattice search over closure_box().
std::vector<ExponentVector> closure_generators(const MonomialIdeal& ideal, int k,
                                               const SearchLimits& limits = {});

/// Same set by testing every point of the box. Test oracle.
std::vector<ExponentVector> closure_generators_box_scan(const MonomialIdeal& ideal, int k,
                                                        const SearchLimits& limits = {});

/// Maximal points of [0, box] outside the ideal, decreasing lexicographic.
std::vector<ExponentVector> standard_corners(const MonomialIdeal& ideal, const ExponentVector& box);

/// Decides I^k == closure(I^k). Only the maximal points of the box that lie
/// outside I^k need an LP: the closure is up-closed, so a counterexample
/// exists iff one of those corners is in it.
ClosureReport is_integrally_closed(const MonomialIdeal& ideal, int k, bool with_generators = false,
                                   const SearchLimits& limits = {});

/// Reports for k = 1..kmax, stopping after the first power that is not closed.
std::vector<ClosureReport> is_normal_up_to(const MonomialIdeal& ideal, int kmax,
                                           const SearchLimits& limits = {});

/// Result of the power test: `found` with the least s, or not found up to s.
struct NaiveClosureResult {
  bool found = false;
  int s = 0;

  friend bool operator==(const NaiveClosureResult&, const NaiveClosureResult&) = default;
};

constexpr int kNaiveSearchCap = 64;

/// Looks for the least s <= s_max with s*a in I^(s*k). Without s_max the bound
/// is the denominator lcm of the LP certificate, which is enough to succeed
/// whenever x^a is in the closure; a default above kNaiveSearchCap raises
/// ResourceCapError.
NaiveClosureResult naive_closure_member(const MonomialIdeal& ideal, const ExponentVector& a, int k,
                                        std::optional<int> s_max = std::nullopt);

/// Turns the LP certificate for vstar(I, a) >= k into a power identity.
/// Throws PreconditionError when x^a is not in the closure of I^k.
PowerIdentityCertificate certify_closure_membership(const MonomialIdeal& ideal,
                                                    const ExponentVector& a, int k);

bool verify_power_identity(const MonomialIdeal& ideal, const ExponentVector& a, int k,
                           const PowerIdentityCertificate& cert);

}  // namespace edgenorm
