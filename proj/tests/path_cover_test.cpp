// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "edgenorm/errors.hpp"
#include "edgenorm/path_cover.hpp"
#include "edgenorm/rational_lp.hpp"
#include "edgenorm/weighted_graph.hpp"
#include "oracles.hpp"

using namespace edgenorm;

namespace {

std::vector<Rational> q(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(parse_rational(x));
  return out;
}

BigInt ceil_sum(const std::vector<Rational>& y) {
  Rational t = 0;
  for (const auto& v : y) t += v;
  return ceil(t);
}

void check_cover(const PathInstance& inst) {
  const PathCover c = extract_cover(inst);
  CHECK(divides(cover_incidence(c, inst.a.size()), inst.a));
  CHECK(BigInt(cover_size(c)) >= ceil_sum(inst.y));
  // Never larger than the best possible multiset.
  CHECK(cover_size(c) <= testing::max_path_multiset(inst.a));
}

}  // namespace

TEST_SUITE("cover") {

TEST_CASE("cover examples") {
  PathInstance disjoint{{1, 1, 1, 1}, q({"1", "0", "1"})};
  CHECK(extract_cover(disjoint) == PathCover{{1, 1}, {3, 1}});
  PathInstance both{{1, 2, 1}, q({"1", "1"})};
  CHECK(extract_cover(both) == PathCover{{1, 1}, {2, 1}});
  // With a = (2,1,3,1,2) the packing (1,0,1,1) overloads vertex 4, and no
  // multiset of three path edges divides x^a: vertices 2 and 4 each allow
  // one edge on either side.
  const ExponentVector a5{2, 1, 3, 1, 2};
  CHECK(first_violation({a5, q({"1", "0", "1", "1"})}) == "y_3 + y_4 <= a_4 (2 > 1)");
  CHECK(testing::max_path_multiset(a5) == 2);
  PathInstance five{a5, q({"1", "0", "1", "0"})};
  const auto c = extract_cover(five);
  CHECK(cover_size(c) == 2);
  CHECK(divides(cover_incidence(c, 5), five.a));
}

TEST_CASE("infeasible or malformed instances are rejected") {
  CHECK_THROWS_AS(extract_cover({{1, 1, 1}, q({"1", "1"})}), PreconditionError);
  CHECK_THROWS_AS(extract_cover({{1, 1, 1}, q({"1"})}), PreconditionError);
  CHECK_THROWS_AS(extract_cover({{1, 1}, q({"-1/2"})}), PreconditionError);
  CHECK_THROWS_AS(extract_cover({{1}, {}}), PreconditionError);
  CHECK(first_violation({{1, 1, 1}, q({"1", "1"})}) == "y_1 + y_2 <= a_2 (2 > 1)");
  CHECK_FALSE(first_violation({{1, 2, 1}, q({"1", "1"})}));
}

TEST_CASE("segments tile the path and satisfy their recurrences") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    ExponentVector a(n);
    for (std::size_t j = 0; j < n; ++j) a.set(j, static_cast<Exponent>(rng() % 5));
    const auto segs = decompose_path(a);
    int next = 1;
    for (const auto& s : segs) {
      CHECK(s.first == next);
      CHECK(s.last >= s.first);
      next = s.last + 1;
      auto at = [&](int v) { return a[static_cast<std::size_t>(v - 1)]; };
      switch (s.rule) {
        case SegmentRule::AlternatingFull:
        case SegmentRule::AlternatingCapped: {
          const auto& b = s.alternating;
          const int len = s.last - s.first + 1;
          REQUIRE(static_cast<int>(b.size()) ==
                  (s.rule == SegmentRule::AlternatingFull ? len : len - 1));
          CHECK(b[0] == at(s.first));
          if (len >= 2) CHECK(at(s.first) <= at(s.first + 1));
          for (std::size_t j = 1; j < b.size(); ++j) {
            CHECK(b[j] + b[j - 1] == at(s.first + static_cast<int>(j)));
          }
          for (auto v : b) CHECK(v >= 0);
          if (s.rule == SegmentRule::AlternatingCapped) CHECK(at(s.last) <= b.back());
          break;
        }
        case SegmentRule::Paired:
        case SegmentRule::PairedWithTail:
          CHECK(((s.last - s.first + 1) % 2 == 0) == (s.rule == SegmentRule::Paired));
          for (int v = s.first; v + 1 <= s.last; v += 2) CHECK(at(v) >= at(v + 1));
          CHECK(at(s.first) > at(s.first + 1));
          break;
        case SegmentRule::LoneVertex:
          CHECK(s.first == s.last);
          CHECK(s.last == static_cast<int>(n));
          break;
      }
    }
    CHECK(next == static_cast<int>(n) + 1);
  }
}

TEST_CASE("ties take the alternating branch") {
  const auto segs = decompose_path(ExponentVector{2, 2, 1});
  REQUIRE(!segs.empty());
  CHECK(segs[0].rule != SegmentRule::Paired);
  CHECK(segs[0].rule != SegmentRule::PairedWithTail);
}

TEST_CASE("random feasible instances") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 1500; ++trial) {
    auto [a, y] = testing::random_path_instance(rng, 9, 4);
    check_cover({a, y});
  }
}

TEST_CASE("optimal LP packings are matched by the cover") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    ExponentVector a(n);
    for (std::size_t j = 0; j < n; ++j) a.set(j, static_cast<Exponent>(rng() % 4));
    const std::vector<Exponent> ones(n - 1, 1);
    const MonomialIdeal ideal = edge_ideal(path_graph(ones));
    const auto cert = vstar(ideal, a);
    // Generators come in decreasing lex order: edge {i, i+1} is column i-1.
    PathInstance inst{a, cert.y};
    const PathCover c = extract_cover(inst);
    CHECK(BigInt(cover_size(c)) == ceil(cert.value));
    CHECK(cover_size(c) == testing::max_path_multiset(a));
  }
}

}  // TEST_SUITE
