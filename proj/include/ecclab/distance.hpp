// Copyright 2026 The ecclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ECCLAB_DISTANCE_HPP_
#define ECCLAB_DISTANCE_HPP_

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace ecclab {

// A nonnegative path length or infinity. Addition saturates.
class Distance {
 public:
  using Value = std::uint64_t;

  constexpr Distance() = default;
  constexpr explicit Distance(Value v) : raw_(v < kInfRaw ? v : kInfRaw - 1) {}

  static constexpr Distance infinite() {
    Distance d;
    d.raw_ = kInfRaw;
    return d;
  }

  constexpr bool is_finite() const { return raw_ != kInfRaw; }
  constexpr bool is_infinite() const { return raw_ == kInfRaw; }

  // Requires is_finite().
  Value value() const;

  friend constexpr Distance operator+(Distance a, Distance b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    Value s = a.raw_ + b.raw_;
    if (s < a.raw_ || s >= kInfRaw) return infinite();
    Distance d;
    d.raw_ = s;
    return d;
  }
  Distance& operator+=(Distance o) { return *this = *this + o; }

  friend constexpr auto operator<=>(Distance, Distance) = default;
  friend constexpr bool operator==(Distance, Distance) = default;

  // "inf" for infinity, decimal otherwise.
  std::string to_string() const;
  // Inverse of to_string; throws InputError.
  static Distance parse(const std::string& text);

 private:
  static constexpr Value kInfRaw = std::numeric_limits<Value>::max();
  Value raw_ = 0;
};

inline constexpr Distance kInfinity = Distance::infinite();

std::ostream& operator<<(std::ostream& os, Distance d);

}  // namespace ecclab

#endif  // ECCLAB_DISTANCE_HPP_
