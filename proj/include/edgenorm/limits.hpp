// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <string>

namespace edgenorm {

/// Bounds on the exhaustive searches. Exceeding either raises
/// ResourceCapError rather than returning a partial answer.
struct SearchLimits {
  /// Largest lattice box (number of points) a closure search may cover.
  double box_cap = 1e7;
  /// Wall-clock budget per top-level call; zero disables the check.
  std::chrono::milliseconds time_cap{30'000};

  /// Defaults overridden by EDGENORM_BOX_CAP and EDGENORM_TIME_CAP
  /// (seconds). Malformed values throw ParseError.
  static SearchLimits from_environment();
};

/// Cooperative wall-clock check shared by one top-level operation.
class Deadline {
 public:
  explicit Deadline(const SearchLimits& limits);

  /// Throws ResourceCapError once the budget is spent.
  void check() const;

 private:
  std::chrono::steady_clock::time_point start_;
  std::chrono::milliseconds budget_;
};

}  // namespace edgenorm
