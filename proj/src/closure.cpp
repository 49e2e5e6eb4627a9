// SPDX-License-Identifier: Apache-2.0

#include "edgenorm/closure.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "edgenorm/errors.hpp"
#include "edgenorm/rational_lp.hpp"

namespace edgenorm {

namespace {

void require_power(int k) {
  if (k < 1) throw PreconditionError("power must be >= 1, got " + std::to_string(k));
}

// Memoized membership test for the closure of I^k.
class ClosureOracle {
 public:
  ClosureOracle(const MonomialIdeal& ideal, int k, const Deadline& deadline)
      : ideal_(ideal), k_(to_rational(k)), deadline_(deadline) {}

  bool contains(const ExponentVector& a) {
    auto it = memo_.find(a);
    if (it != memo_.end()) return it->second;
    deadline_.check();
    bool inside = vstar(ideal_, a).value >= k_;
    memo_.emplace(a, inside);
    return inside;
  }

  /// a is in the closure and no a - e_i is.
  bool is_minimal(const ExponentVector& a) {
    if (!contains(a)) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      ExponentVector lower = a;
      lower.set(i, a[i] - 1);
      if (contains(lower)) return false;
    }
    return true;
  }

  /// Least v in [lo, hi] with contains(a with a_j = v); requires a_j = hi inside.
  Exponent least_coordinate(ExponentVector& a, std::size_t j, Exponent lo, Exponent hi) {
    while (lo < hi) {
      Exponent mid = lo + (hi - lo) / 2;
      a.set(j, mid);
      if (contains(a)) hi = mid;
      else lo = mid + 1;
    }
    a.set(j, lo);
    return lo;
  }

 private:
  const MonomialIdeal& ideal_;
  Rational k_;
  const Deadline& deadline_;
  std::unordered_map<ExponentVector, bool, ExponentVectorHash> memo_;
};

void check_box(const ExponentVector& box, const SearchLimits& limits) {
  double volume = 1;
  for (Exponent e : box) volume *= static_cast<double>(e) + 1;
  if (volume > limits.box_cap) {
    std::ostringstream os;
    os << "lattice box " << box << " has " << volume << " points, above the cap of "
       << limits.box_cap;
    throw ResourceCapError(os.str());
  }
}

// Lexicographically smallest point of the closure inside [0, corner];
// corner itself must be in the closure.
ExponentVector lex_least_below(ClosureOracle& oracle, const ExponentVector& corner) {
  ExponentVector a = corner;
  for (std::size_t j = 0; j < a.size(); ++j) oracle.least_coordinate(a, j, 0, corner[j]);
  return a;
}

}  // namespace

bool in_closure(const MonomialIdeal& ideal, const ExponentVector& a, int k) {
  require_power(k);
  return vstar(ideal, a).value >= k;
}

ExponentVector closure_box(const MonomialIdeal& ideal, int k) {
  require_power(k);
  ideal.require_proper();
  ExponentVector box(ideal.ambient_dimension());
  for (std::size_t j = 0; j < box.size(); ++j) box.set(j, checked_mul(k, ideal.max_exponent(j)));
  return box;
}

std::vector<ExponentVector> closure_generators(const MonomialIdeal& ideal, int k,
                                               const SearchLimits& limits) {
  const ExponentVector box = closure_box(ideal, k);
  check_box(box, limits);
  Deadline deadline(limits);
  ClosureOracle oracle(ideal, k, deadline);
  const std::size_t n = box.size();
  std::vector<ExponentVector> found;

  // Coordinates [0, j) of `a` are fixed; the rest are free in [0, box].
  ExponentVector a = box;
  auto search = [&](auto&& self, std::size_t j) -> void {
    if (j == n) {
      if (oracle.is_minimal(a)) found.push_back(a);
      return;
    }
    ExponentVector top = a;
    for (std::size_t i = j; i < n; ++i) top.set(i, box[i]);
    if (!oracle.contains(top)) return;

    ExponentVector base = a;
    for (std::size_t i = j; i < n; ++i) base.set(i, 0);
    if (oracle.contains(base)) {
      // Every other completion lies above base.
      if (oracle.is_minimal(base)) found.push_back(base);
      return;
    }

    if (j + 1 == n) {
      ExponentVector last = a;
      oracle.least_coordinate(last, j, 0, box[j]);
      if (oracle.is_minimal(last)) found.push_back(last);
      return;
    }

    for (Exponent v = 0; v <= box[j]; ++v) {
      a.set(j, v);
      for (std::size_t i = j + 1; i < n; ++i) a.set(i, 0);
      self(self, j + 1);
      // Larger v dominates (prefix, v, 0, ..., 0) once that is inside.
      ExponentVector floor_point = a;
      floor_point.set(j, v);
      for (std::size_t i = j + 1; i < n; ++i) floor_point.set(i, 0);
      if (oracle.contains(floor_point)) break;
    }
    a.set(j, box[j]);
  };
  for (std::size_t i = 0; i < n; ++i) a.set(i, 0);
  search(search, 0);

  std::sort(found.begin(), found.end(), std::greater<>());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<ExponentVector> closure_generators_box_scan(const MonomialIdeal& ideal, int k,
                                                        const SearchLimits& limits) {
  const ExponentVector box = closure_box(ideal, k);
  check_box(box, limits);
  Deadline deadline(limits);
  ClosureOracle oracle(ideal, k, deadline);
  std::vector<ExponentVector> found;

  ExponentVector a(box.size());
  while (true) {
    if (oracle.is_minimal(a)) found.push_back(a);
    std::size_t j = 0;
    while (j < a.size() && a[j] == box[j]) {
      a.set(j, 0);
      ++j;
    }
    if (j == a.size()) break;
    a.set(j, a[j] + 1);
  }
  std::sort(found.begin(), found.end(), std::greater<>());
  return found;
}

std::vector<ExponentVector> standard_corners(const MonomialIdeal& ideal, const ExponentVector& box) {
  if (box.size() != ideal.ambient_dimension()) {
    throw DimensionMismatch("box does not match the ideal's ring");
  }
  std::vector<ExponentVector> corners{box};
  for (const auto& g : ideal.generators()) {
    std::vector<ExponentVector> kept;
    std::vector<ExponentVector> created;
    for (auto& c : corners) {
      if (!divides(g, c)) {
        kept.push_back(std::move(c));
        continue;
      }
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (g[j] == 0) continue;
        ExponentVector lowered = c;
        lowered.set(j, g[j] - 1);
        created.push_back(std::move(lowered));
      }
    }
    std::sort(created.begin(), created.end());
    created.erase(std::unique(created.begin(), created.end()), created.end());
    // Survivors among `kept` stay maximal; only new corners can be dominated.
    for (std::size_t i = 0; i < created.size(); ++i) {
      const auto& c = created[i];
      bool dominated = std::any_of(kept.begin(), kept.end(),
                                   [&](const ExponentVector& d) { return divides(c, d); });
      for (std::size_t other = 0; !dominated && other < created.size(); ++other) {
        dominated = other != i && divides(c, created[other]);
      }
      if (!dominated) kept.push_back(c);
    }
    corners = std::move(kept);
  }
  std::sort(corners.begin(), corners.end(), std::greater<>());
  return corners;
}

ClosureReport is_integrally_closed(const MonomialIdeal& ideal, int k, bool with_generators,
                                   const SearchLimits& limits) {
  const ExponentVector box = closure_box(ideal, k);
  check_box(box, limits);
  Deadline deadline(limits);
  ClosureOracle oracle(ideal, k, deadline);

  ClosureReport report;
  report.k = k;
  const auto corners = standard_corners(power(ideal, k), box);
  for (const auto& corner : corners) {
    deadline.check();
    if (!oracle.contains(corner)) continue;
    ExponentVector candidate = lex_least_below(oracle, corner);
    if (!report.witness || candidate < *report.witness) report.witness = std::move(candidate);
  }
  report.closed = !report.witness.has_value();

  if (report.witness) {
    auto integral = v_int(ideal, *report.witness);
    if (integral.value >= k || !oracle.is_minimal(*report.witness)) {
      throw Error("internal error: witness " + report.witness->to_string() +
                  " fails its own invariants");
    }
  }
  if (with_generators) report.closure_generators = closure_generators(ideal, k, limits);
  return report;
}

std::vector<ClosureReport> is_normal_up_to(const MonomialIdeal& ideal, int kmax,
                                           const SearchLimits& limits) {
  if (kmax < 1) throw PreconditionError("kmax must be >= 1, got " + std::to_string(kmax));
  ideal.require_proper();
  std::vector<ClosureReport> reports;
  for (int k = 1; k <= kmax; ++k) {
    reports.push_back(is_integrally_closed(ideal, k, false, limits));
    if (!reports.back().closed) break;
  }
  return reports;
}

PowerIdentityCertificate certify_closure_membership(const MonomialIdeal& ideal,
                                                    const ExponentVector& a, int k) {
  require_power(k);
  MembershipCertificate cert = vstar(ideal, a);
  const Rational target = to_rational(k);
  if (cert.value < target) {
    throw PreconditionError(a.to_string() + " is not in the closure of I^" + std::to_string(k) +
                            " (vstar = " + to_string(cert.value) + ")");
  }

  // Shrink components in index order until they sum to k.
  Rational excess = cert.value - target;
  for (auto& yi : cert.y) {
    if (sgn(excess) == 0) break;
    Rational cut = std::min(yi, excess);
    yi -= cut;
    excess -= cut;
  }

  const BigInt s = denominator_lcm(cert.y);
  PowerIdentityCertificate out;
  out.s = to_exponent(s);

  const auto& gens = ideal.generators();
  std::vector<Exponent> load(a.size(), 0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Rational scaled = cert.y[i] * Rational(s);
    Exponent mult = to_exponent(scaled.get_num());
    out.multiplicities.push_back(mult);
    for (std::size_t j = 0; j < a.size(); ++j) {
      load[j] = checked_add(load[j], checked_mul(mult, gens[i][j]));
    }
  }
  const ExponentVector scaled_a = a.scaled(out.s);
  std::vector<Exponent> slack(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) slack[j] = scaled_a[j] - load[j];
  out.slack = ExponentVector(std::move(slack));

  if (!verify_power_identity(ideal, a, k, out)) {
    throw Error("internal error: power identity for " + a.to_string() + " does not verify");
  }
  return out;
}

bool verify_power_identity(const MonomialIdeal& ideal, const ExponentVector& a, int k,
                           const PowerIdentityCertificate& cert) {
  const auto& gens = ideal.generators();
  if (k < 1 || cert.s < 1 || cert.multiplicities.size() != gens.size() ||
      cert.slack.size() != a.size() || a.size() != ideal.ambient_dimension()) {
    return false;
  }
  try {
    Exponent total = 0;
    ExponentVector rebuilt = cert.slack;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (cert.multiplicities[i] < 0) return false;
      total = checked_add(total, cert.multiplicities[i]);
      rebuilt += gens[i].scaled(cert.multiplicities[i]);
    }
    return total == checked_mul(cert.s, k) && rebuilt == a.scaled(cert.s);
  } catch (const OverflowError&) {
    return false;
  }
}

NaiveClosureResult naive_closure_member(const MonomialIdeal& ideal, const ExponentVector& a, int k,
                                        std::optional<int> s_max) {
  require_power(k);
  if (!s_max) {
    MembershipCertificate cert = vstar(ideal, a);
    BigInt bound = cert.value >= k ? BigInt(certify_closure_membership(ideal, a, k).s)
                                   : denominator_lcm(cert.y);
    if (bound > kNaiveSearchCap) {
      throw ResourceCapError("naive closure search would need s up to " + bound.get_str() +
                             ", above the cap of " + std::to_string(kNaiveSearchCap));
    }
    s_max = static_cast<int>(bound.get_si());
  }
  if (*s_max < 1) throw PreconditionError("s_max must be >= 1");
  ideal.require_proper();

  for (int s = 1; s <= *s_max; ++s) {
    if (v_int(ideal, a.scaled(s)).value >= Rational(static_cast<long>(s) * k)) return {true, s};
  }
  return {false, *s_max};
}

}  // namespace edgenorm
