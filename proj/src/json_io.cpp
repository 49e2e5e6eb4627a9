// SPDX-License-Identifier: Apache-2.0

#include "edgenorm/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "edgenorm/errors.hpp"

namespace edgenorm {

namespace {

std::int64_t require_int(const Json& parent, const char* key, const std::string& where) {
  auto it = parent.find(key);
  if (it == parent.end()) throw ParseError(where, std::string("missing field \"") + key + "\"");
  if (!it->is_number_integer()) {
    throw ParseError(where + "/" + key, "expected an integer, got " + it->dump());
  }
  return it->get<std::int64_t>();
}

}  // namespace

WeightedGraph parse_graph_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) throw ParseError("/", "expected a JSON object");

  const std::int64_t n = require_int(doc, "n", "");
  if (n < 1 || n > 1'000'000) throw ParseError("/n", "vertex count must be positive");

  auto edges_it = doc.find("edges");
  if (edges_it == doc.end()) throw ParseError("/", "missing field \"edges\"");
  if (!edges_it->is_array()) throw ParseError("/edges", "expected an array");

  std::vector<WeightedEdge> edges;
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> seen;
  for (std::size_t i = 0; i < edges_it->size(); ++i) {
    const std::string where = "/edges/" + std::to_string(i);
    const Json& e = (*edges_it)[i];
    if (!e.is_object()) throw ParseError(where, "expected an object");
    const std::int64_t u = require_int(e, "u", where);
    const std::int64_t v = require_int(e, "v", where);
    const std::int64_t w = require_int(e, "w", where);
    if (u < 1 || u > n) throw ParseError(where + "/u", "vertex " + std::to_string(u) + " not in 1..n");
    if (v < 1 || v > n) throw ParseError(where + "/v", "vertex " + std::to_string(v) + " not in 1..n");
    if (u == v) throw ParseError(where, "loop at vertex " + std::to_string(u));
    if (u > v) {
      throw ParseError(where, "reversed edge (u=" + std::to_string(u) + " > v=" +
                                  std::to_string(v) + "); list it with u < v");
    }
    if (w < 1) throw ParseError(where + "/w", "weight must be a positive integer");
    auto [it, inserted] = seen.emplace(std::pair(u, v), i);
    if (!inserted) {
      throw ParseError(where, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "}, first given at /edges/" + std::to_string(it->second));
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
  }
  return WeightedGraph(static_cast<int>(n), std::move(edges));
}

WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_graph_json(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

Json to_json(const WeightedGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"w", e.w}});
  return {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

Json to_json(const ExponentVector& v) {
  Json out = Json::array();
  for (Exponent e : v) out.push_back(e);
  return out;
}

Json to_json(const PatternWitness& w) {
  return {{"kind", std::string(to_string(w.kind))}, {"vertices", w.vertices}, {"weights", w.weights}};
}

Json to_json(const ClosureReport& r) {
  Json out = {{"k", r.k}, {"closed", r.closed}};
  out["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  if (r.closure_generators) {
    Json gens = Json::array();
    for (const auto& g : *r.closure_generators) gens.push_back(to_json(g));
    out["closure_generators"] = std::move(gens);
  }
  return out;
}

Json to_json(const MembershipCertificate& c) {
  Json y = Json::array();
  for (const auto& yi : c.y) y.push_back(to_string(yi));
  return {{"value", to_string(c.value)}, {"y", std::move(y)}, {"integral", c.integral}};
}

Json to_json(const PowerIdentityCertificate& c) {
  return {{"s", c.s}, {"multiplicities", c.multiplicities}, {"slack", to_json(c.slack)}};
}

Json to_json(const PathCover& cover) {
  Json out = Json::array();
  for (const auto& [left, count] : cover) {
    out.push_back({{"edge", {left, left + 1}}, {"count", count}});
  }
  return out;
}

}  // namespace edgenorm
