// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgenorm/closure.hpp"
#include "edgenorm/json_io.hpp"
#include "edgenorm/limits.hpp"
#include "edgenorm/weighted_graph.hpp"

namespace edgenorm {

enum class VerifyMode {
  PatternEquivalence,  // pattern-free <=> I(G) integrally closed
  Normality,           // pattern-free stars/paths/cycles have closed powers
};

enum class Family { Any, Star, Path, Cycle };

std::string_view to_string(VerifyMode mode);
std::string_view to_string(Family family);
VerifyMode parse_verify_mode(std::string_view text);  // "thm36" | "normality"
Family parse_family(std::string_view text);           // "star" | "path" | "cycle" | "all"

struct Universe {
  int n_max = 4;
  Exponent weight_max = 3;
  int kmax = 1;
  /// Normality mode only; Any means every family.
  std::vector<Family> families{Family::Star, Family::Path, Family::Cycle};
  /// When set, draw `samples` random graphs on exactly n_max vertices
  /// instead of enumerating every labeled graph (equivalence mode).
  std::optional<std::uint64_t> seed;
  std::size_t samples = 0;
  /// Fault injection for the harness itself.
  ScanOptions scan;
  int jobs = 1;
  SearchLimits limits;
};

struct GraphRecord {
  Family family = Family::Any;
  WeightedGraph graph{1, {}};
  std::optional<PatternWitness> pattern;
  /// Equivalence mode: the k = 1 report. Normality mode: the powers probed
  /// (k = 1..kmax for pattern-free graphs, k = 1 otherwise). Empty for
  /// edgeless graphs, whose zero ideal is closed by convention.
  std::vector<ClosureReport> reports;
  bool consistent = true;
  double seconds = 0;
};

struct VerificationRun {
  VerifyMode mode = VerifyMode::PatternEquivalence;
  Universe universe;
  std::vector<GraphRecord> records;

  std::size_t violations() const;
};

/// Every labeled graph on 1..n vertices (n <= n_max), each vertex pair
/// absent or weighted 1..weight_max. Throws ResourceCapError above
/// kMaxExhaustiveGraphs.
std::vector<WeightedGraph> enumerate_graphs(int n_max, Exponent weight_max);
constexpr std::size_t kMaxExhaustiveGraphs = 2'000'000;

/// Seeded sample of graphs on exactly n vertices.
std::vector<WeightedGraph> sample_graphs(int n, Exponent weight_max, std::size_t count,
                                         std::uint64_t seed);

/// All weightings in [1, weight_max] of a family member on n vertices.
std::vector<WeightedGraph> family_graphs(Family family, int n, Exponent weight_max);

VerificationRun run_verification(VerifyMode mode, const Universe& universe);

/// Deterministic JSON; timings only when asked for.
Json to_json(const VerificationRun& run, bool include_records, bool include_timings);

}  // namespace edgenorm
