// SPDX-License-Identifier: Apache-2.0

#include "edgenorm/limits.hpp"

#include <cstdlib>
#include <string>

#include "edgenorm/errors.hpp"

namespace edgenorm {

namespace {

double read_positive(const char* name, double fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    double value = std::stod(raw, &used);
    if (used != std::string(raw).size() || value < 0) throw std::invalid_argument(raw);
    return value;
  } catch (const std::exception&) {
    throw ParseError(name, std::string("expected a non-negative number, got '") + raw + "'");
  }
}

}  // namespace

SearchLimits SearchLimits::from_environment() {
  SearchLimits limits;
  limits.box_cap = read_positive("EDGENORM_BOX_CAP", limits.box_cap);
  double seconds = read_positive("EDGENORM_TIME_CAP",
                                 static_cast<double>(limits.time_cap.count()) / 1000.0);
  limits.time_cap = std::chrono::milliseconds(static_cast<long long>(seconds * 1000.0));
  return limits;
}

Deadline::Deadline(const SearchLimits& limits)
    : start_(std::chrono::steady_clock::now()), budget_(limits.time_cap) {}

void Deadline::check() const {
  if (budget_.count() == 0) return;
  auto elapsed = std::chrono::steady_clock::now() - start_;
  if (elapsed > budget_) {
    throw ResourceCapError("wall-clock cap of " + std::to_string(budget_.count() / 1000.0) +
                           " s exceeded");
  }
}

}  // namespace edgenorm
