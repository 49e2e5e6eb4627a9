// SPDX-License-Identifier: Apache-2.0

#include "edgenorm/rational_lp.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>

#include "edgenorm/errors.hpp"

namespace edgenorm {

namespace lp {

Solution maximize_sum(const Matrix& a, const std::vector<Rational>& b) {
  const std::size_t rows = a.rows;
  const std::size_t cols = a.cols;
  if (b.size() != rows) throw DimensionMismatch("right-hand side does not match row count");
  for (const auto& v : b) {
    if (sgn(v) < 0) throw PreconditionError("right-hand side must be non-negative");
  }

  // Tableau columns: originals, slacks, rhs.
  const std::size_t width = cols + rows + 1;
  const std::size_t rhs = cols + rows;
  std::vector<Rational> t(rows * width);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) t[r * width + c] = a(r, c);
    t[r * width + cols + r] = 1;
    t[r * width + rhs] = b[r];
  }
  // Reduced costs of the maximization; objective value sits in obj[rhs] negated.
  std::vector<Rational> obj(width);
  for (std::size_t c = 0; c < cols; ++c) obj[c] = 1;

  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = cols + r;

  Rational ratio, best_ratio, factor;
  while (true) {
    std::size_t entering = rhs;
    for (std::size_t c = 0; c < rhs; ++c) {
      if (sgn(obj[c]) > 0) {
        entering = c;
        break;
      }
    }
    if (entering == rhs) break;

    std::optional<std::size_t> leaving;
    for (std::size_t r = 0; r < rows; ++r) {
      const Rational& coef = t[r * width + entering];
      if (sgn(coef) <= 0) continue;
      ratio = t[r * width + rhs] / coef;
      if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[*leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (!leaving) throw PreconditionError("linear program is unbounded");

    const std::size_t p = *leaving;
    Rational pivot = t[p * width + entering];
    for (std::size_t c = 0; c < width; ++c) {
      if (sgn(t[p * width + c]) != 0) t[p * width + c] /= pivot;
    }
    auto eliminate = [&](Rational* row) {
      if (sgn(row[entering]) == 0) return;
      factor = row[entering];
      for (std::size_t c = 0; c < width; ++c) {
        const Rational& pv = t[p * width + c];
        if (sgn(pv) != 0) row[c] -= factor * pv;
      }
    };
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != p) eliminate(&t[r * width]);
    }
    eliminate(obj.data());
    basis[p] = entering;
  }

  Solution out;
  out.x.assign(cols, Rational(0));
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < cols) out.x[basis[r]] = t[r * width + rhs];
  }
  out.value = 0;
  for (const auto& x : out.x) out.value += x;
  return out;
}

}  // namespace lp

namespace {

void check_query(const MonomialIdeal& ideal, const ExponentVector& a) {
  ideal.require_proper();
  if (a.size() != ideal.ambient_dimension()) {
    throw DimensionMismatch("query of length " + std::to_string(a.size()) + " against ideal in " +
                            std::to_string(ideal.ambient_dimension()) + " variables");
  }
}

// Program over z = y - lower with optional upper bounds on y. Returns nullopt
// when lower alone already violates M*y <= a.
std::optional<lp::Solution> solve_bounded(const MonomialIdeal& ideal, const ExponentVector& a,
                                          const std::vector<Exponent>& lower,
                                          const std::vector<std::optional<Exponent>>& upper) {
  const auto& gens = ideal.generators();
  const std::size_t n = a.size();
  const std::size_t m = gens.size();

  std::vector<Rational> rhs;
  rhs.reserve(n + m);
  for (std::size_t j = 0; j < n; ++j) {
    Exponent used = 0;
    for (std::size_t i = 0; i < m; ++i) used = checked_add(used, checked_mul(gens[i][j], lower[i]));
    if (used > a[j]) return std::nullopt;
    rhs.push_back(to_rational(a[j] - used));
  }
  std::vector<std::size_t> capped;
  for (std::size_t i = 0; i < m; ++i) {
    if (!upper[i]) continue;
    if (*upper[i] < lower[i]) return std::nullopt;
    capped.push_back(i);
    rhs.push_back(to_rational(*upper[i] - lower[i]));
  }

  lp::Matrix mat{n + capped.size(), m, std::vector<Rational>((n + capped.size()) * m)};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (gens[i][j] != 0) mat(j, i) = to_rational(gens[i][j]);
    }
  }
  for (std::size_t r = 0; r < capped.size(); ++r) mat(n + r, capped[r]) = 1;

  lp::Solution sol = lp::maximize_sum(mat, rhs);
  for (std::size_t i = 0; i < m; ++i) {
    sol.x[i] += to_rational(lower[i]);
    sol.value += to_rational(lower[i]);
  }
  return sol;
}

MembershipCertificate checked(const MonomialIdeal& ideal, const ExponentVector& a,
                              MembershipCertificate cert) {
  if (!verify_certificate(ideal, a, cert)) {
    throw Error("internal error: solver produced an invalid certificate for " + a.to_string());
  }
  return cert;
}

struct Node {
  Rational bound;
  std::uint64_t id;
  std::vector<Exponent> lower;
  std::vector<std::optional<Exponent>> upper;
  std::vector<Rational> x;
};

struct NodeOrder {
  bool operator()(const Node& lhs, const Node& rhs) const {
    if (lhs.bound != rhs.bound) return lhs.bound < rhs.bound;
    return lhs.id > rhs.id;
  }
};

}  // namespace

MembershipCertificate vstar(const MonomialIdeal& ideal, const ExponentVector& a) {
  check_query(ideal, a);
  const std::size_t m = ideal.num_generators();
  auto sol = solve_bounded(ideal, a, std::vector<Exponent>(m, 0),
                           std::vector<std::optional<Exponent>>(m));
  return checked(ideal, a, {std::move(sol->x), std::move(sol->value), false});
}

MembershipCertificate v_int(const MonomialIdeal& ideal, const ExponentVector& a) {
  check_query(ideal, a);
  const std::size_t m = ideal.num_generators();

  MembershipCertificate best{std::vector<Rational>(m, Rational(0)), Rational(0), true};
  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  std::uint64_t next_id = 0;

  auto push = [&](std::vector<Exponent> lower, std::vector<std::optional<Exponent>> upper) {
    auto sol = solve_bounded(ideal, a, lower, upper);
    if (!sol) return;
    if (floor(sol->value) <= floor(best.value)) {
      // Integral optima can still tie the incumbent; nothing to gain.
      return;
    }
    open.push({std::move(sol->value), next_id++, std::move(lower), std::move(upper),
               std::move(sol->x)});
  };

  push(std::vector<Exponent>(m, 0), std::vector<std::optional<Exponent>>(m));
  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    if (floor(node.bound) <= floor(best.value)) continue;

    // Most fractional component, lowest index on ties.
    std::optional<std::size_t> branch;
    Rational best_distance;
    const Rational half(1, 2);
    for (std::size_t i = 0; i < m; ++i) {
      if (is_integer(node.x[i])) continue;
      Rational frac = node.x[i] - Rational(floor(node.x[i]));
      Rational distance = abs(frac - half);
      if (!branch || distance < best_distance) {
        branch = i;
        best_distance = distance;
      }
    }
    if (!branch) {
      best = {std::move(node.x), std::move(node.bound), true};
      continue;
    }

    const std::size_t i = *branch;
    const Exponent down = to_exponent(floor(node.x[i]));
    auto upper_down = node.upper;
    upper_down[i] = down;
    push(node.lower, std::move(upper_down));
    auto lower_up = node.lower;
    lower_up[i] = down + 1;
    push(std::move(lower_up), std::move(node.upper));
  }
  return checked(ideal, a, std::move(best));
}

MembershipCertificate v_int_enumerate(const MonomialIdeal& ideal, const ExponentVector& a) {
  check_query(ideal, a);
  const auto& gens = ideal.generators();
  const std::size_t m = gens.size();
  const std::size_t n = a.size();

  std::vector<Exponent> remaining(a.begin(), a.end());
  std::vector<Exponent> y(m, 0), best_y(m, 0);
  Exponent best_value = 0;

  auto cap = [&](std::size_t i) {
    Exponent c = -1;
    for (std::size_t j = 0; j < n; ++j) {
      if (gens[i][j] == 0) continue;
      Exponent q = remaining[j] / gens[i][j];
      c = c < 0 ? q : std::min(c, q);
    }
    return c;
  };

  auto search = [&](auto&& self, std::size_t i, Exponent value) -> void {
    if (i == m) {
      if (value > best_value) {
        best_value = value;
        best_y = y;
      }
      return;
    }
    Exponent optimistic = value;
    for (std::size_t r = i; r < m; ++r) optimistic = checked_add(optimistic, cap(r));
    if (optimistic <= best_value) return;

    const Exponent top = cap(i);
    for (Exponent count = top; count >= 0; --count) {
      for (std::size_t j = 0; j < n; ++j) remaining[j] -= count * gens[i][j];
      y[i] = count;
      self(self, i + 1, value + count);
      for (std::size_t j = 0; j < n; ++j) remaining[j] += count * gens[i][j];
    }
    y[i] = 0;
  };
  search(search, 0, 0);

  MembershipCertificate cert{{}, to_rational(best_value), true};
  for (Exponent v : best_y) cert.y.push_back(to_rational(v));
  return checked(ideal, a, std::move(cert));
}

bool verify_certificate(const MonomialIdeal& ideal, const ExponentVector& a,
                        const MembershipCertificate& cert) {
  const auto& gens = ideal.generators();
  if (a.size() != ideal.ambient_dimension() || cert.y.size() != gens.size()) return false;

  Rational sum = 0;
  for (const auto& yi : cert.y) {
    if (sgn(yi) < 0) return false;
    if (cert.integral && !is_integer(yi)) return false;
    sum += yi;
  }
  if (sum != cert.value) return false;

  Rational load;
  for (std::size_t j = 0; j < a.size(); ++j) {
    load = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i][j] != 0) load += to_rational(gens[i][j]) * cert.y[i];
    }
    if (load > to_rational(a[j])) return false;
  }
  return true;
}

}  // namespace edgenorm
