// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace edgenorm {

using Exponent = std::int64_t;

// Checked 64-bit arithmetic; throw OverflowError instead of wrapping.
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

/// A point of Z_+^n, the exponent of the monomial x^a.
///
/// Ordering is lexicographic on the entries, which is also the order used
/// to break ties everywhere a "smallest" vector is requested.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : entries_(n, 0) {}
  ExponentVector(std::initializer_list<Exponent> entries);
  explicit ExponentVector(std::vector<Exponent> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept;

  Exponent operator[](std::size_t i) const { return entries_[i]; }
  Exponent at(std::size_t i) const { return entries_.at(i); }
  void set(std::size_t i, Exponent value);

  std::span<const Exponent> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  Exponent total_degree() const;

  ExponentVector& operator+=(const ExponentVector& other);
  friend ExponentVector operator+(ExponentVector lhs, const ExponentVector& rhs) {
    lhs += rhs;
    return lhs;
  }
  /// Componentwise difference; throws if any entry would go negative.
  ExponentVector operator-(const ExponentVector& rhs) const;
  ExponentVector scaled(Exponent factor) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

  std::string to_string() const;

 private:
  std::vector<Exponent> entries_;
};

std::ostream& operator<<(std::ostream& os, const ExponentVector& v);

void require_same_size(const ExponentVector& a, const ExponentVector& b);

/// Componentwise order: true iff d <= a in every coordinate (x^d | x^a).
bool divides(const ExponentVector& d, const ExponentVector& a);

/// The i-th unit vector of Z^n (0-based index).
ExponentVector unit_vector(std::size_t n, std::size_t i);

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept;
};

}  // namespace edgenorm
