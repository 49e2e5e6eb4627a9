// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgenorm/exponent_vector.hpp"
#include "edgenorm/monomial_ideal.hpp"

namespace edgenorm {

using Vertex = int;  // 1-based

struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  Exponent w = 1;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
  friend auto operator<=>(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Simple graph on vertices 1..n with a positive integer weight per edge.
/// Edges are stored with u < v, sorted by (u, v).
class WeightedGraph {
 public:
  /// Validates and sorts `edges`; throws InvalidGraph on loops, duplicates,
  /// out-of-range endpoints or non-positive weights. Reversed pairs are
  /// normalized here; the JSON reader is stricter.
  WeightedGraph(int n, std::vector<WeightedEdge> edges);

  int num_vertices() const noexcept { return n_; }
  const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  /// Weight of {u, v}, or nullopt if the pair is not an edge.
  std::optional<Exponent> weight(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return weight(u, v).has_value(); }

  std::size_t num_heavy_edges() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;
  friend auto operator<=>(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  int n_;
  std::vector<WeightedEdge> edges_;
  std::vector<Exponent> matrix_;  // n*n, 0 = no edge
};

inline bool is_heavy(const WeightedEdge& e) { return e.w >= 2; }

/// I(G) = (x_u^w x_v^w : {u,v} in E), over n = num_vertices() variables.
MonomialIdeal edge_ideal(const WeightedGraph& g);

struct InducedSubgraph {
  WeightedGraph graph;
  std::vector<Vertex> original;  // original[i] is the source vertex of vertex i+1
};

/// G[A], relabeled 1..|A| preserving order.
InducedSubgraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> vertices);

enum class PatternKind { HeavyP3 = 0, Heavy2K2 = 1, HeavyTriangle = 2 };

std::string_view to_string(PatternKind kind);
/// Accepts "p3", "2k2", "triangle" and the enumerator spellings.
PatternKind parse_pattern_kind(std::string_view text);

/// One of the three heavy induced subgraphs whose edge ideal is not
/// integrally closed.
///
/// HeavyP3 (a,b,c): path a-b-c, weights (w(ab), w(bc)).
/// Heavy2K2 (a,b,c,d): edges ab and cd, weights (w(ab), w(cd)).
/// HeavyTriangle (a,b,c): weights (w(ab), w(bc), w(ac)).
struct PatternWitness {
  PatternKind kind;
  std::vector<Vertex> vertices;
  std::vector<Exponent> weights;

  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

struct ScanOptions {
  bool detect_p3 = true;
  bool detect_2k2 = true;
  bool detect_triangle = true;
};

/// Finds a forbidden induced pattern, preferring the lowest kind and then
/// the lexicographically smallest vertex tuple.
std::optional<PatternWitness> forbidden_pattern_scan(const WeightedGraph& g,
                                                     const ScanOptions& options = {});

struct PatternExample {
  WeightedGraph graph;
  ExponentVector witness;  // in the closure of I(graph) but not in I(graph)
};

/// The pattern graph on vertices 1..3 (or 1..4) with the given heavy weights,
/// and an explicit monomial of the closure of its edge ideal lying outside
/// the ideal. Weights follow PatternWitness conventions for the canonical
/// tuple (1,2,3) / (1,2,3,4).
PatternExample non_closure_witness(PatternKind kind, std::span<const Exponent> weights);

// Structural families. Star: leaves 1..n-1, centre n, weights[i] on {i+1, n}.
// Path: weights[i] on {i+1, i+2}. Cycle: weights[i] on {i+1, i+2} and the
// last weight on {1, n}.
WeightedGraph star_graph(std::span<const Exponent> weights);
WeightedGraph path_graph(std::span<const Exponent> weights);
WeightedGraph cycle_graph(std::span<const Exponent> weights);

}  // namespace edgenorm
