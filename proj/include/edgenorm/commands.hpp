// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "edgenorm/harness.hpp"
#include "edgenorm/path_cover.hpp"
#include "edgenorm/weighted_graph.hpp"

namespace edgenorm::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kInputError = 2,
  kResourceCap = 3,
};

struct CommandResult {
  int exit_code = kOk;
  std::string output;  // stdout text (JSON or aligned text)
  std::string error;   // stderr text
};

struct OutputOptions {
  bool json = false;
  bool records = false;  // verify: include every graph record
  bool timings = false;  // verify: include per-graph wall time
};

CommandResult scan(const WeightedGraph& g, const OutputOptions& out);
CommandResult check(const WeightedGraph& g, int kmax, const OutputOptions& out,
                    const SearchLimits& limits);
CommandResult closure(const WeightedGraph& g, int k, const OutputOptions& out,
                      const SearchLimits& limits);
CommandResult witness(PatternKind kind, const std::vector<Exponent>& weights,
                      const OutputOptions& out);
CommandResult cover(const PathInstance& inst, const OutputOptions& out);
CommandResult verify(VerifyMode mode, const Universe& universe, const OutputOptions& out);

/// Runs `body`, mapping library exceptions onto the exit-code contract:
/// input problems -> 2, resource caps -> 3, anything else -> 1.
CommandResult guarded(const std::function<CommandResult()>& body);

}  // namespace edgenorm::cli
