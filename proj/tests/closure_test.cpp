// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "edgenorm/closure.hpp"
#include "edgenorm/errors.hpp"
#include "edgenorm/rational_lp.hpp"
#include "edgenorm/weighted_graph.hpp"
#include "oracles.hpp"

using namespace edgenorm;

namespace {

const MonomialIdeal kP3(3, {{2, 2, 0}, {0, 2, 2}});

std::vector<ExponentVector> sorted(std::vector<ExponentVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("closure") {

TEST_CASE("closure generator examples") {
  CHECK(sorted(closure_generators(kP3, 1)) == sorted({{2, 2, 0}, {0, 2, 2}, {1, 2, 1}}));
  CHECK(closure_generators(MonomialIdeal(2, {{2, 2}}), 1) == std::vector<ExponentVector>{{2, 2}});
  MonomialIdeal sqfree(3, {{1, 1, 0}, {0, 1, 1}});
  CHECK(closure_generators(sqfree, 2) == power(sqfree, 2).generators());
  CHECK_THROWS_AS(closure_generators(MonomialIdeal::zero(2), 1), ZeroIdealError);
  CHECK_THROWS_AS(closure_generators(kP3, 0), PreconditionError);
}

TEST_CASE("is_integrally_closed examples") {
  auto r = is_integrally_closed(kP3, 1);
  CHECK_FALSE(r.closed);
  REQUIRE(r.witness);
  CHECK(*r.witness == ExponentVector{1, 2, 1});

  CHECK(is_integrally_closed(edge_ideal(WeightedGraph(2, {{1, 2, 5}})), 1).closed);

  const std::vector<Exponent> t{2, 2, 2};
  auto tri = is_integrally_closed(edge_ideal(cycle_graph(t)), 1);
  CHECK_FALSE(tri.closed);
  REQUIRE(tri.witness);
  CHECK(divides(*tri.witness, ExponentVector{1, 1, 4}));
  // The lexicographically smallest minimal witness of the all-2 triangle.
  CHECK(*tri.witness == ExponentVector{1, 1, 2});
}

TEST_CASE("is_normal_up_to examples") {
  const std::vector<Exponent> star{2, 1, 1};
  auto s = is_normal_up_to(edge_ideal(star_graph(star)), 3);
  REQUIRE(s.size() == 3);
  for (const auto& r : s) CHECK(r.closed);

  auto p = is_normal_up_to(kP3, 2);
  REQUIRE(p.size() == 1);
  CHECK_FALSE(p[0].closed);

  const std::vector<Exponent> c4{1, 1, 1, 1};
  auto c = is_normal_up_to(edge_ideal(cycle_graph(c4)), 3);
  REQUIRE(c.size() == 3);
  for (const auto& r : c) CHECK(r.closed);
}

TEST_CASE("naive power test examples") {
  CHECK(naive_closure_member(kP3, ExponentVector{1, 4, 1}, 1, 4) == NaiveClosureResult{true, 2});
  CHECK(naive_closure_member(kP3, ExponentVector{2, 2, 0}, 1) == NaiveClosureResult{true, 1});
  CHECK(naive_closure_member(kP3, ExponentVector{1, 1, 1}, 1, 6) ==
        NaiveClosureResult{false, 6});
  CHECK(vstar(kP3, ExponentVector{1, 1, 1}).value == Rational(1, 2));
}

TEST_CASE("power identity examples") {
  auto c = certify_closure_membership(kP3, ExponentVector{1, 4, 1}, 1);
  CHECK(c.s == 2);
  CHECK(c.multiplicities == std::vector<Exponent>{1, 1});
  CHECK(c.slack == ExponentVector{0, 4, 0});
  CHECK(verify_power_identity(kP3, ExponentVector{1, 4, 1}, 1, c));

  auto g = certify_closure_membership(kP3, ExponentVector{2, 2, 0}, 1);
  CHECK(g.s == 1);
  CHECK(g.multiplicities == std::vector<Exponent>{1, 0});

  MonomialIdeal k2(4, {{2, 2, 0, 0}, {0, 0, 2, 2}});
  auto h = certify_closure_membership(k2, ExponentVector{1, 1, 1, 1}, 1);
  CHECK(h.s == 2);
  CHECK(h.multiplicities == std::vector<Exponent>{1, 1});
  CHECK(h.slack == ExponentVector{0, 0, 0, 0});

  CHECK_THROWS_AS(certify_closure_membership(kP3, ExponentVector{1, 1, 1}, 1), PreconditionError);
  auto bad = c;
  bad.multiplicities[0] += 1;
  CHECK_FALSE(verify_power_identity(kP3, ExponentVector{1, 4, 1}, 1, bad));
  auto bad_slack = c;
  bad_slack.slack = ExponentVector{0, 3, 0};
  CHECK_FALSE(verify_power_identity(kP3, ExponentVector{1, 4, 1}, 1, bad_slack));
}

TEST_CASE("resource caps are loud") {
  SearchLimits tiny;
  tiny.box_cap = 10;
  CHECK_THROWS_AS(closure_generators(kP3, 3, tiny), ResourceCapError);
  CHECK_THROWS_AS(is_integrally_closed(kP3, 3, false, tiny), ResourceCapError);
  // y = (1/2, 34/67) is optimal, so the default search bound would be 134.
  MonomialIdeal coarse(2, {{2, 0}, {0, 67}});
  CHECK(in_closure(coarse, ExponentVector{1, 34}, 1));
  CHECK_THROWS_AS(naive_closure_member(coarse, ExponentVector{1, 34}, 1), ResourceCapError);
  CHECK(naive_closure_member(coarse, ExponentVector{1, 34}, 1, 2) == NaiveClosureResult{true, 2});
}

TEST_CASE("search, box scan and a vertex-enumeration oracle agree") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    MonomialIdeal ideal(n, testing::random_generators(rng, n, 3, 3));
    if (ideal.is_unit()) continue;
    for (int k = 1; k <= 2; ++k) {
      const auto gens = closure_generators(ideal, k);
      CHECK(gens == closure_generators_box_scan(ideal, k));
      CHECK(sorted(gens) == testing::naive_closure(ideal.generators(), n, k));
      CHECK(std::is_sorted(gens.begin(), gens.end(), std::greater<>()));

      const auto pk = power(ideal, k);
      // Containment: I^k sits inside its closure, with equality iff closed.
      for (const auto& g : pk.generators()) CHECK(testing::naive_member(gens, g));
      const auto report = is_integrally_closed(ideal, k, true);
      CHECK(report.closed == (gens == pk.generators()));
      CHECK(report.closure_generators == gens);
      if (!report.closed) {
        REQUIRE(report.witness);
        CHECK(vstar(ideal, *report.witness).value >= k);
        CHECK(v_int(ideal, *report.witness).value < k);
        // Smallest minimal generator outside I^k.
        std::vector<ExponentVector> outside;
        for (const auto& g : gens) {
          if (!member(pk, g)) outside.push_back(g);
        }
        CHECK(*report.witness == *std::min_element(outside.begin(), outside.end()));
      }

      // Soundness chain and agreement with the power test.
      for (const auto& g : gens) {
        const auto cert = certify_closure_membership(ideal, g, k);
        CHECK(verify_power_identity(ideal, g, k, cert));
        const auto naive = naive_closure_member(ideal, g, k);
        CHECK(naive.found);
        CHECK(naive.s <= cert.s);
      }
    }
  }
}

TEST_CASE("naive power test never contradicts the LP") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    MonomialIdeal ideal(n, testing::random_generators(rng, n, 3, 3));
    if (ideal.is_unit()) continue;
    ExponentVector a(n);
    for (std::size_t j = 0; j < n; ++j) a.set(j, rng() % 6);
    const int k = 1 + static_cast<int>(rng() % 2);
    const auto r = naive_closure_member(ideal, a, k, 6);
    if (r.found) CHECK(vstar(ideal, a).value >= k);
    if (!in_closure(ideal, a, k)) {
      CHECK_FALSE(r.found);
      continue;
    }
    const auto cert = certify_closure_membership(ideal, a, k);
    if (cert.s <= 6) {
      CHECK(r.found);
      CHECK(r.s <= cert.s);
    }
  }
}

TEST_CASE("an induced obstruction within kmax shows up in the ambient graph") {
  // P3 (2,2) sits inside P4 (2,2,1) and the 5-cycle (2,2,1,1,1).
  const std::vector<Exponent> p4{2, 2, 1};
  const std::vector<Exponent> c5{2, 2, 1, 1, 1};
  for (const auto& g : {path_graph(p4), cycle_graph(c5)}) {
    auto reports = is_normal_up_to(edge_ideal(g), 2);
    CHECK_FALSE(reports.back().closed);
  }
}

}  // TEST_SUITE
