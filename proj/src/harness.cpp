// SPDX-License-Identifier: Apache-2.0

#include "edgenorm/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <random>
#include <thread>
#include <tuple>

#include "edgenorm/errors.hpp"

namespace edgenorm {

std::string_view to_string(VerifyMode mode) {
  return mode == VerifyMode::PatternEquivalence ? "thm36" : "normality";
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Any: return "graph";
    case Family::Star: return "star";
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
  }
  return "?";
}

VerifyMode parse_verify_mode(std::string_view text) {
  if (text == "thm36") return VerifyMode::PatternEquivalence;
  if (text == "normality") return VerifyMode::Normality;
  throw PreconditionError("unknown verify mode '" + std::string(text) +
                          "' (expected thm36 or normality)");
}

Family parse_family(std::string_view text) {
  if (text == "star") return Family::Star;
  if (text == "path") return Family::Path;
  if (text == "cycle") return Family::Cycle;
  if (text == "all") return Family::Any;
  throw PreconditionError("unknown family '" + std::string(text) + "'");
}

std::size_t VerificationRun::violations() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.consistent; }));
}

namespace {

std::vector<std::pair<Vertex, Vertex>> vertex_pairs(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

// Odometer over [lo, hi]^len; calls visit for each tuple in lexicographic order.
template <typename Visit>
void for_each_tuple(std::size_t len, Exponent lo, Exponent hi, Visit&& visit) {
  std::vector<Exponent> digits(len, lo);
  while (true) {
    visit(digits);
    std::size_t i = len;
    while (i > 0 && digits[i - 1] == hi) digits[--i] = lo;
    if (i == 0) return;
    ++digits[i - 1];
  }
}

GraphRecord check_graph(VerifyMode mode, Family family, const WeightedGraph& g,
                        const Universe& universe) {
  auto started = std::chrono::steady_clock::now();
  GraphRecord record{family, g, forbidden_pattern_scan(g, universe.scan), {}, true, 0};
  if (g.num_edges() > 0) {
    const MonomialIdeal ideal = edge_ideal(g);
    if (mode == VerifyMode::PatternEquivalence || record.pattern) {
      record.reports.push_back(is_integrally_closed(ideal, 1, false, universe.limits));
    } else {
      record.reports = is_normal_up_to(ideal, universe.kmax, universe.limits);
    }
  }
  const bool all_closed = std::all_of(record.reports.begin(), record.reports.end(),
                                      [](const ClosureReport& r) { return r.closed; });
  record.consistent = record.pattern.has_value() != all_closed;
  record.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return record;
}

}  // namespace

std::vector<WeightedGraph> enumerate_graphs(int n_max, Exponent weight_max) {
  if (n_max < 1 || weight_max < 1) throw PreconditionError("n_max and weight_max must be >= 1");
  double total = 0;
  for (int n = 1; n <= n_max; ++n) {
    total += std::pow(static_cast<double>(weight_max + 1), n * (n - 1) / 2.0);
  }
  if (total > static_cast<double>(kMaxExhaustiveGraphs)) {
    char count[32];
    std::snprintf(count, sizeof count, "%.0f", total);
    throw ResourceCapError("exhaustive universe has " + std::string(count) +
                           " graphs; use sampling above " +
                           std::to_string(kMaxExhaustiveGraphs));
  }
  std::vector<WeightedGraph> graphs;
  for (int n = 1; n <= n_max; ++n) {
    const auto pairs = vertex_pairs(n);
    for_each_tuple(pairs.size(), 0, weight_max, [&](const std::vector<Exponent>& w) {
      std::vector<WeightedEdge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (w[i] > 0) edges.push_back({pairs[i].first, pairs[i].second, w[i]});
      }
      graphs.emplace_back(n, std::move(edges));
    });
  }
  return graphs;
}

std::vector<WeightedGraph> sample_graphs(int n, Exponent weight_max, std::size_t count,
                                         std::uint64_t seed) {
  if (n < 1 || weight_max < 1) throw PreconditionError("n and weight_max must be >= 1");
  // Raw engine output reduced by modulo, so samples match across standard
  // libraries (distribution objects are implementation-defined).
  std::mt19937_64 rng(seed);
  const auto pairs = vertex_pairs(n);
  const auto choices = static_cast<std::uint64_t>(weight_max + 1);
  std::vector<WeightedGraph> graphs;
  graphs.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<WeightedEdge> edges;
    for (const auto& [u, v] : pairs) {
      auto w = static_cast<Exponent>(rng() % choices);
      if (w > 0) edges.push_back({u, v, w});
    }
    graphs.emplace_back(n, std::move(edges));
  }
  return graphs;
}

std::vector<WeightedGraph> family_graphs(Family family, int n, Exponent weight_max) {
  std::size_t edges = 0;
  switch (family) {
    case Family::Star:
    case Family::Path:
      if (n < 2) return {};
      edges = static_cast<std::size_t>(n - 1);
      break;
    case Family::Cycle:
      if (n < 3) return {};
      edges = static_cast<std::size_t>(n);
      break;
    case Family::Any:
      throw PreconditionError("family_graphs needs a concrete family");
  }
  std::vector<WeightedGraph> graphs;
  for_each_tuple(edges, 1, weight_max, [&](const std::vector<Exponent>& w) {
    switch (family) {
      case Family::Star: graphs.push_back(star_graph(w)); break;
      case Family::Path: graphs.push_back(path_graph(w)); break;
      default: graphs.push_back(cycle_graph(w)); break;
    }
  });
  return graphs;
}

VerificationRun run_verification(VerifyMode mode, const Universe& universe) {
  if (universe.kmax < 1) throw PreconditionError("kmax must be >= 1");
  std::vector<std::pair<Family, WeightedGraph>> work;
  if (mode == VerifyMode::PatternEquivalence) {
    auto graphs = universe.seed
                      ? sample_graphs(universe.n_max, universe.weight_max,
                                      universe.samples, *universe.seed)
                      : enumerate_graphs(universe.n_max, universe.weight_max);
    for (auto& g : graphs) work.emplace_back(Family::Any, std::move(g));
  } else {
    std::vector<Family> families = universe.families;
    if (std::find(families.begin(), families.end(), Family::Any) != families.end()) {
      families = {Family::Star, Family::Path, Family::Cycle};
    }
    for (Family family : families) {
      for (int n = 2; n <= universe.n_max; ++n) {
        for (auto& g : family_graphs(family, n, universe.weight_max)) {
          work.emplace_back(family, std::move(g));
        }
      }
    }
  }

  std::vector<GraphRecord> records(work.size());
  std::vector<std::exception_ptr> failures(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      try {
        records[i] = check_graph(mode, work[i].first, work[i].second, universe);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, universe.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  std::stable_sort(records.begin(), records.end(), [](const GraphRecord& a, const GraphRecord& b) {
    return std::tie(a.family, a.graph) < std::tie(b.family, b.graph);
  });
  return {mode, universe, std::move(records)};
}

Json to_json(const VerificationRun& run, bool include_records, bool include_timings) {
  const Universe& u = run.universe;
  Json out;
  out["mode"] = std::string(to_string(run.mode));
  out["n_max"] = u.n_max;
  out["weight_max"] = u.weight_max;
  out["kmax"] = run.mode == VerifyMode::PatternEquivalence ? 1 : u.kmax;
  if (run.mode == VerifyMode::Normality) {
    Json families = Json::array();
    for (Family f : u.families) families.push_back(std::string(to_string(f)));
    out["families"] = std::move(families);
  }
  out["seed"] = u.seed ? Json(*u.seed) : Json(nullptr);
  out["samples"] = u.seed ? u.samples : 0;
  out["graphs"] = run.records.size();
  out["violations"] = run.violations();

  auto record_json = [&](const GraphRecord& r) {
    Json j;
    j["family"] = std::string(to_string(r.family));
    j["graph"] = to_json(r.graph);
    j["pattern"] = r.pattern ? to_json(*r.pattern) : Json(nullptr);
    Json reports = Json::array();
    for (const auto& rep : r.reports) reports.push_back(to_json(rep));
    j["reports"] = std::move(reports);
    j["consistent"] = r.consistent;
    if (include_timings) j["seconds"] = r.seconds;
    return j;
  };

  Json counterexamples = Json::array();
  for (const auto& r : run.records) {
    if (!r.consistent) counterexamples.push_back(record_json(r));
  }
  out["counterexamples"] = std::move(counterexamples);
  if (include_records) {
    Json records = Json::array();
    for (const auto& r : run.records) records.push_back(record_json(r));
    out["records"] = std::move(records);
  }
  return out;
}

}  // namespace edgenorm
