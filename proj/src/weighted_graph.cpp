// SPDX-License-Identifier: Apache-2.0

#include "edgenorm/weighted_graph.hpp"

#include <algorithm>
#include <tuple>

#include "edgenorm/errors.hpp"

namespace edgenorm {

WeightedGraph::WeightedGraph(int n, std::vector<WeightedEdge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw InvalidGraph("graph needs at least one vertex");
  matrix_.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > n) {
      throw InvalidGraph("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "} has an endpoint outside 1.." + std::to_string(n));
    }
    if (e.u == e.v) throw InvalidGraph("loop at vertex " + std::to_string(e.u));
    if (e.w < 1) {
      throw InvalidGraph("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "} has non-positive weight " + std::to_string(e.w));
    }
    auto& slot = matrix_[static_cast<std::size_t>(e.u - 1) * n + (e.v - 1)];
    if (slot != 0) {
      throw InvalidGraph("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "}");
    }
    slot = e.w;
    matrix_[static_cast<std::size_t>(e.v - 1) * n + (e.u - 1)] = e.w;
  }
  std::sort(edges_.begin(), edges_.end());
}

std::optional<Exponent> WeightedGraph::weight(Vertex u, Vertex v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_) return std::nullopt;
  Exponent w = matrix_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
  if (w == 0) return std::nullopt;
  return w;
}

std::size_t WeightedGraph::num_heavy_edges() const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), is_heavy));
}

MonomialIdeal edge_ideal(const WeightedGraph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<ExponentVector> generators;
  generators.reserve(g.num_edges());
  for (const auto& e : g.edges()) {
    ExponentVector b(n);
    b.set(e.u - 1, e.w);
    b.set(e.v - 1, e.w);
    generators.push_back(std::move(b));
  }
  return MonomialIdeal(n, std::move(generators));
}

InducedSubgraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> kept(vertices.begin(), vertices.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (Vertex v : kept) {
    if (v < 1 || v > g.num_vertices()) {
      throw InvalidGraph("vertex " + std::to_string(v) + " is not in 1.." +
                         std::to_string(g.num_vertices()));
    }
  }
  if (kept.empty()) throw InvalidGraph("induced subgraph on the empty vertex set");

  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      if (auto w = g.weight(kept[i], kept[j])) {
        edges.push_back({static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1), *w});
      }
    }
  }
  return {WeightedGraph(static_cast<int>(kept.size()), std::move(edges)), std::move(kept)};
}

std::string_view to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::HeavyP3: return "HeavyP3";
    case PatternKind::Heavy2K2: return "Heavy2K2";
    case PatternKind::HeavyTriangle: return "HeavyTriangle";
  }
  return "?";
}

PatternKind parse_pattern_kind(std::string_view text) {
  if (text == "p3" || text == "HeavyP3") return PatternKind::HeavyP3;
  if (text == "2k2" || text == "Heavy2K2") return PatternKind::Heavy2K2;
  if (text == "triangle" || text == "HeavyTriangle") return PatternKind::HeavyTriangle;
  throw PreconditionError("unknown pattern '" + std::string(text) +
                          "' (expected p3, 2k2 or triangle)");
}

std::optional<PatternWitness> forbidden_pattern_scan(const WeightedGraph& g,
                                                     const ScanOptions& options) {
  std::vector<WeightedEdge> heavy;
  std::copy_if(g.edges().begin(), g.edges().end(), std::back_inserter(heavy), is_heavy);

  std::optional<PatternWitness> best;
  auto offer = [&](PatternWitness candidate) {
    if (!best || std::tie(candidate.kind, candidate.vertices) < std::tie(best->kind, best->vertices)) {
      best = std::move(candidate);
    }
  };

  for (std::size_t i = 0; i < heavy.size(); ++i) {
    for (std::size_t j = i + 1; j < heavy.size(); ++j) {
      const WeightedEdge& e = heavy[i];
      const WeightedEdge& f = heavy[j];

      // Shared endpoint: centre b, outer ends x and z.
      Vertex b = 0, x = 0, z = 0;
      if (e.u == f.u) std::tie(b, x, z) = std::tuple(e.u, e.v, f.v);
      else if (e.u == f.v) std::tie(b, x, z) = std::tuple(e.u, e.v, f.u);
      else if (e.v == f.u) std::tie(b, x, z) = std::tuple(e.v, e.u, f.v);
      else if (e.v == f.v) std::tie(b, x, z) = std::tuple(e.v, e.u, f.u);

      if (b != 0) {
        if (x > z) std::swap(x, z);
        auto closing = g.weight(x, z);
        if (!closing) {
          if (options.detect_p3) {
            offer({PatternKind::HeavyP3, {x, b, z}, {*g.weight(x, b), *g.weight(b, z)}});
          }
        } else if (*closing >= 2 && options.detect_triangle) {
          std::vector<Vertex> t{x, b, z};
          std::sort(t.begin(), t.end());
          offer({PatternKind::HeavyTriangle,
                 t,
                 {*g.weight(t[0], t[1]), *g.weight(t[1], t[2]), *g.weight(t[0], t[2])}});
        }
        continue;
      }

      if (!options.detect_2k2) continue;
      bool crossed = g.adjacent(e.u, f.u) || g.adjacent(e.u, f.v) || g.adjacent(e.v, f.u) ||
                     g.adjacent(e.v, f.v);
      if (crossed) continue;
      const auto& [first, second] = e.u < f.u ? std::tie(e, f) : std::tie(f, e);
      offer({PatternKind::Heavy2K2, {first.u, first.v, second.u, second.v}, {first.w, second.w}});
    }
  }
  return best;
}

PatternExample non_closure_witness(PatternKind kind, std::span<const Exponent> weights) {
  const std::size_t expected = kind == PatternKind::HeavyTriangle ? 3 : 2;
  if (weights.size() != expected) {
    throw PreconditionError(std::string(to_string(kind)) + " takes " + std::to_string(expected) +
                            " weights, got " + std::to_string(weights.size()));
  }
  for (Exponent w : weights) {
    if (w < 2) {
      throw PreconditionError("pattern weights must be >= 2, got " + std::to_string(w));
    }
  }

  switch (kind) {
    case PatternKind::HeavyP3: {
      const Exponent w1 = weights[0], w2 = weights[1];
      return {WeightedGraph(3, {{1, 2, w1}, {2, 3, w2}}),
              ExponentVector{w1 - 1, checked_add(w1, w2), w2 - 1}};
    }
    case PatternKind::Heavy2K2: {
      const Exponent w1 = weights[0], w3 = weights[1];
      return {WeightedGraph(4, {{1, 2, w1}, {3, 4, w3}}),
              ExponentVector{w1 - 1, w1 - 1, w3 - 1, w3 - 1}};
    }
    case PatternKind::HeavyTriangle: {
      const Exponent w1 = weights[0], w2 = weights[1], w3 = weights[2];
      WeightedGraph g(3, {{1, 2, w1}, {2, 3, w2}, {1, 3, w3}});
      if (w1 > w2 - 1) return {std::move(g), ExponentVector{w3 - 1, w2 - 1, checked_add(w2, w3)}};
      return {std::move(g), ExponentVector{checked_add(w1, w3), w1 - 1, w3 - 1}};
    }
  }
  throw PreconditionError("unknown pattern kind");
}

WeightedGraph star_graph(std::span<const Exponent> weights) {
  if (weights.empty()) throw InvalidGraph("a star needs at least one edge");
  const int n = static_cast<int>(weights.size()) + 1;
  std::vector<WeightedEdge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i + 1, n, weights[i]});
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph path_graph(std::span<const Exponent> weights) {
  if (weights.empty()) throw InvalidGraph("a path needs at least one edge");
  const int n = static_cast<int>(weights.size()) + 1;
  std::vector<WeightedEdge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i + 1, i + 2, weights[i]});
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph cycle_graph(std::span<const Exponent> weights) {
  if (weights.size() < 3) throw InvalidGraph("a cycle needs at least three edges");
  const int n = static_cast<int>(weights.size());
  std::vector<WeightedEdge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i + 1, i + 2, weights[i]});
  edges.push_back({1, n, weights[n - 1]});
  return WeightedGraph(n, std::move(edges));
}

}  // namespace edgenorm
