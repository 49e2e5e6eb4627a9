// SPDX-License-Identifier: Apache-2.0

#include "edgenorm/path_cover.hpp"

#include "edgenorm/errors.hpp"

namespace edgenorm {

Exponent cover_size(const PathCover& cover) {
  Exponent total = 0;
  for (const auto& [left, count] : cover) total = checked_add(total, count);
  return total;
}

ExponentVector cover_incidence(const PathCover& cover, std::size_t n) {
  ExponentVector out(n);
  for (const auto& [left, count] : cover) {
    if (left < 1 || static_cast<std::size_t>(left) >= n) {
      throw PreconditionError("edge {" + std::to_string(left) + "," + std::to_string(left + 1) +
                              "} is not on a path with " + std::to_string(n) + " vertices");
    }
    out.set(left - 1, checked_add(out[left - 1], count));
    out.set(left, checked_add(out[left], count));
  }
  return out;
}

std::vector<Segment> decompose_path(const ExponentVector& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Segment> segments;
  int p = 0;  // 0-based start of the current block
  while (p < n) {
    if (n - p == 1) {
      segments.push_back({p + 1, p + 1, SegmentRule::LoneVertex, {}});
      break;
    }
    if (a[p] > a[p + 1]) {
      int end = p;  // exclusive end of the run of dominated pairs
      while (end + 1 < n && a[end] >= a[end + 1]) end += 2;
      if (end >= n - 1) {
        auto rule = end == n ? SegmentRule::Paired : SegmentRule::PairedWithTail;
        segments.push_back({p + 1, n, rule, {}});
        break;
      }
      segments.push_back({p + 1, end, SegmentRule::Paired, {}});
      p = end;
      continue;
    }

    // a[p] <= a[p+1]: alternating sums, cut at the first capped vertex.
    std::vector<Exponent> b{a[p]};
    int cut = -1;
    for (int j = p + 1; j < n; ++j) {
      if (j - p >= 2 && a[j] <= b.back()) {
        cut = j;
        break;
      }
      b.push_back(a[j] - b.back());
    }
    if (cut < 0) {
      segments.push_back({p + 1, n, SegmentRule::AlternatingFull, std::move(b)});
      break;
    }
    segments.push_back({p + 1, cut + 1, SegmentRule::AlternatingCapped, std::move(b)});
    p = cut + 1;
  }
  return segments;
}

std::optional<std::string> first_violation(const PathInstance& inst) {
  const std::size_t n = inst.num_vertices();
  if (n < 2) return "a path needs at least two vertices";
  if (inst.y.size() != n - 1) {
    return "expected " + std::to_string(n - 1) + " edge values, got " +
           std::to_string(inst.y.size());
  }
  for (std::size_t i = 0; i < inst.y.size(); ++i) {
    if (sgn(inst.y[i]) < 0) return "y_" + std::to_string(i + 1) + " >= 0";
  }
  for (std::size_t v = 0; v < n; ++v) {
    Rational load = 0;
    std::string lhs;
    if (v >= 1) {
      load += inst.y[v - 1];
      lhs = "y_" + std::to_string(v);
    }
    if (v + 1 < n) {
      load += inst.y[v];
      lhs += (lhs.empty() ? "" : " + ") + std::string("y_") + std::to_string(v + 1);
    }
    if (load > to_rational(inst.a[v])) {
      return lhs + " <= a_" + std::to_string(v + 1) + " (" + to_string(load) + " > " +
             std::to_string(inst.a[v]) + ")";
    }
  }
  return std::nullopt;
}

PathCover extract_cover(const PathInstance& inst) {
  if (auto violation = first_violation(inst)) {
    throw PreconditionError("infeasible path instance: " + *violation);
  }
  const auto& a = inst.a;
  PathCover cover;
  auto emit = [&](int left, Exponent count) {
    if (count > 0) cover[left] += count;
  };

  for (const auto& seg : decompose_path(a)) {
    switch (seg.rule) {
      case SegmentRule::LoneVertex:
        break;
      case SegmentRule::Paired:
      case SegmentRule::PairedWithTail:
        for (int v = seg.first; v + 1 <= seg.last; v += 2) emit(v, a[v]);
        break;
      case SegmentRule::AlternatingFull:
        for (int r = 0; seg.first + r < seg.last; ++r) emit(seg.first + r, seg.alternating[r]);
        break;
      case SegmentRule::AlternatingCapped: {
        const int len = seg.last - seg.first + 1;
        for (int r = 0; r + 2 < len; ++r) emit(seg.first + r, seg.alternating[r]);
        emit(seg.last - 1, a[seg.last - 1]);
        break;
      }
    }
  }

  Rational total = 0;
  for (const auto& yi : inst.y) total += yi;
  const ExponentVector used = cover_incidence(cover, a.size());
  if (!divides(used, a) || BigInt(cover_size(cover)) < ceil(total)) {
    throw Error("internal error: cover extraction failed for a = " + a.to_string());
  }
  return cover;
}

}  // namespace edgenorm
