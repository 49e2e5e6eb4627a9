// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "edgenorm/closure.hpp"
#include "edgenorm/path_cover.hpp"
#include "edgenorm/rational_lp.hpp"
#include "edgenorm/weighted_graph.hpp"

namespace edgenorm {

using Json = nlohmann::ordered_json;

/// Reads {"n": N, "edges": [{"u": U, "v": V, "w": W}, ...]}. Vertices are
/// 1-based and every edge must be written with u < v; reversed or repeated
/// pairs are rejected. Errors carry a JSON pointer or byte offset.
WeightedGraph parse_graph_json(std::string_view text);
WeightedGraph read_graph_file(const std::string& path);

Json to_json(const WeightedGraph& g);
Json to_json(const ExponentVector& v);
Json to_json(const PatternWitness& w);
Json to_json(const ClosureReport& r);
Json to_json(const MembershipCertificate& c);
Json to_json(const PowerIdentityCertificate& c);
Json to_json(const PathCover& cover);

}  // namespace edgenorm
