// SPDX-License-Identifier: Apache-2.0

#include "edgenorm/exponent_vector.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "edgenorm/errors.hpp"

namespace edgenorm {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("exponent addition overflows 64 bits");
  }
  return out;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("exponent multiplication overflows 64 bits");
  }
  return out;
}

namespace {

void require_nonnegative(std::span<const Exponent> entries) {
  if (std::any_of(entries.begin(), entries.end(), [](Exponent e) { return e < 0; })) {
    throw PreconditionError("exponent vectors must have non-negative entries");
  }
}

}  // namespace

ExponentVector::ExponentVector(std::initializer_list<Exponent> entries) : entries_(entries) {
  require_nonnegative(entries_);
}

ExponentVector::ExponentVector(std::vector<Exponent> entries) : entries_(std::move(entries)) {
  require_nonnegative(entries_);
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Exponent e) { return e == 0; });
}

void ExponentVector::set(std::size_t i, Exponent value) {
  if (value < 0) throw PreconditionError("exponent vectors must have non-negative entries");
  entries_.at(i) = value;
}

Exponent ExponentVector::total_degree() const {
  Exponent sum = 0;
  for (Exponent e : entries_) sum = checked_add(sum, e);
  return sum;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] = checked_add(entries_[i], other.entries_[i]);
  }
  return *this;
}

ExponentVector ExponentVector::operator-(const ExponentVector& rhs) const {
  require_same_size(*this, rhs);
  ExponentVector out(size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.set(i, entries_[i] - rhs.entries_[i]);
  }
  return out;
}

ExponentVector ExponentVector::scaled(Exponent factor) const {
  if (factor < 0) throw PreconditionError("negative scale factor");
  ExponentVector out(size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = checked_mul(entries_[i], factor);
  }
  return out;
}

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

void require_same_size(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("exponent vectors of length " + std::to_string(a.size()) +
                            " and " + std::to_string(b.size()));
  }
}

bool divides(const ExponentVector& d, const ExponentVector& a) {
  require_same_size(d, a);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > a[i]) return false;
  }
  return true;
}

ExponentVector unit_vector(std::size_t n, std::size_t i) {
  ExponentVector v(n);
  v.set(i, 1);
  return v;
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : v) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace edgenorm
