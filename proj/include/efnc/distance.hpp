// Copyright 2026 The efnc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>

namespace efnc {

/// Hop count between two vertices, or Infinite when no path exists.
///
/// Infinite absorbs addition and compares greater than every finite value.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::uint32_t hops) : hops_(hops) {}

  static constexpr Distance infinite() {
    Distance d;
    d.hops_ = kInfinite;
    return d;
  }

  constexpr bool is_infinite() const { return hops_ == kInfinite; }
  constexpr bool is_finite() const { return hops_ != kInfinite; }

  // Precondition: is_finite().
  constexpr std::uint32_t hops() const { return hops_; }

  // Finite hop count as a double, +inf otherwise.
  constexpr double as_double() const {
    return is_infinite() ? std::numeric_limits<double>::infinity()
                         : static_cast<double>(hops_);
  }

  friend constexpr Distance operator+(Distance a, Distance b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return Distance(a.hops_ + b.hops_);
  }

  friend constexpr auto operator<=>(Distance, Distance) = default;

  friend std::ostream& operator<<(std::ostream& os, Distance d) {
    if (d.is_infinite()) return os << "inf";
    return os << d.hops_;
  }

 private:
  static constexpr std::uint32_t kInfinite =
      std::numeric_limits<std::uint32_t>::max();
  std::uint32_t hops_ = 0;
};

}  // namespace efnc
