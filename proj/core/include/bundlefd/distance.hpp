#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "bundlefd/errors.hpp"

namespace bundlefd {

/// Non-negative path length, or infinite when no path exists.
///
/// Infinite compares greater than every finite value and absorbs addition.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::int64_t value) : value_(value < 0 ? 0 : value) {}

  static constexpr Distance infinite() {
    Distance d;
    d.value_ = kInfinite;
    return d;
  }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  constexpr bool is_finite() const { return value_ != kInfinite; }

  std::int64_t value() const {
    if (is_infinite()) throw InvalidArgument("value() called on an infinite distance");
    return value_;
  }

  constexpr auto operator<=>(const Distance&) const = default;

  friend constexpr Distance operator+(Distance lhs, Distance rhs) {
    if (lhs.is_infinite() || rhs.is_infinite()) return infinite();
    return Distance(lhs.value_ + rhs.value_);
  }
  friend constexpr Distance operator+(Distance lhs, std::int64_t rhs) { return lhs + Distance(rhs); }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

  friend std::ostream& operator<<(std::ostream& os, const Distance& d) { return os << d.to_string(); }

 private:
  static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max();
  std::int64_t value_ = 0;
};

}  // namespace bundlefd
