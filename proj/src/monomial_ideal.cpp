// SPDX-License-Identifier: Apache-2.0

#include "edgenorm/monomial_ideal.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "edgenorm/errors.hpp"

namespace edgenorm {

std::vector<ExponentVector> minimal_elements(std::vector<ExponentVector> vectors) {
  // A divisor never has larger total degree, so a degree-ascending sweep
  // only needs to compare against already accepted vectors.
  std::vector<std::pair<Exponent, ExponentVector>> keyed;
  keyed.reserve(vectors.size());
  for (auto& v : vectors) {
    Exponent degree = v.total_degree();
    keyed.emplace_back(degree, std::move(v));
  }
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());

  std::vector<ExponentVector> kept;
  for (auto& [degree, v] : keyed) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](const ExponentVector& g) { return divides(g, v); });
    if (!dominated) kept.push_back(std::move(v));
  }
  std::sort(kept.begin(), kept.end(), std::greater<>());
  return kept;
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<ExponentVector> generators) : n_(n) {
  for (const auto& g : generators) {
    if (g.size() != n) {
      throw DimensionMismatch("generator " + g.to_string() + " does not have length " +
                              std::to_string(n));
    }
  }
  generators_ = minimal_elements(std::move(generators));
}

void MonomialIdeal::require_proper() const {
  if (is_zero()) throw ZeroIdealError();
  if (is_unit()) throw UnitIdealError();
}

Exponent MonomialIdeal::max_exponent(std::size_t j) const {
  Exponent best = 0;
  for (const auto& g : generators_) best = std::max(best, g.at(j));
  return best;
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal) {
  os << '{';
  for (std::size_t i = 0; i < ideal.num_generators(); ++i) {
    if (i) os << ", ";
    os << ideal.generators()[i];
  }
  return os << '}';
}

MonomialIdeal minimalize(std::size_t n, std::vector<ExponentVector> generators) {
  return MonomialIdeal(n, std::move(generators));
}

bool member(const MonomialIdeal& ideal, const ExponentVector& a) {
  if (a.size() != ideal.ambient_dimension()) {
    throw DimensionMismatch("query of length " + std::to_string(a.size()) +
                            " against ideal in " + std::to_string(ideal.ambient_dimension()) +
                            " variables");
  }
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const ExponentVector& g) { return divides(g, a); });
}

MonomialIdeal product(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  if (lhs.ambient_dimension() != rhs.ambient_dimension()) {
    throw DimensionMismatch("product of ideals in different rings");
  }
  std::vector<ExponentVector> sums;
  sums.reserve(lhs.num_generators() * rhs.num_generators());
  for (const auto& g : lhs.generators()) {
    for (const auto& h : rhs.generators()) sums.push_back(g + h);
  }
  return MonomialIdeal(lhs.ambient_dimension(), std::move(sums));
}

MonomialIdeal power(const MonomialIdeal& ideal, int k) {
  if (k < 1) throw PreconditionError("power exponent must be >= 1, got " + std::to_string(k));
  MonomialIdeal result = ideal;
  for (int step = 1; step < k; ++step) result = product(result, ideal);
  return result;
}

}  // namespace edgenorm
