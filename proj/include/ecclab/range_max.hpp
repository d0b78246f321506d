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

#ifndef ECCLAB_RANGE_MAX_HPP_
#define ECCLAB_RANGE_MAX_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace ecclab {

struct RangePoint {
  std::vector<std::int64_t> coords;
  std::int64_t value = 0;
  std::size_t payload = 0;
};

struct RangeHit {
  std::int64_t value = 0;
  std::size_t payload = 0;

  friend bool operator==(const RangeHit&, const RangeHit&) = default;
};

// Larger value wins; equal values go to the smaller payload.
inline bool better_hit(const RangeHit& a, const RangeHit& b) {
  return a.value != b.value ? a.value > b.value : a.payload < b.payload;
}

// Static orthogonal range-maximum index over closed boxes.
class RangeMaxIndex {
 public:
  // kAuto picks the layered range tree unless its size estimate is too large
  // for the dimension, then a k-d tree.
  enum class Backend { kAuto, kRangeTree, kKdTree };

  RangeMaxIndex(std::size_t dimension, std::vector<RangePoint> points,
                Backend backend = Backend::kAuto);
  ~RangeMaxIndex();
  RangeMaxIndex(RangeMaxIndex&&) noexcept;
  RangeMaxIndex& operator=(RangeMaxIndex&&) noexcept;

  // Best point with lo[i] <= coords[i] <= hi[i] for every i.
  std::optional<RangeHit> query(std::span<const std::int64_t> lo,
                                std::span<const std::int64_t> hi) const;

  std::size_t dimension() const { return dim_; }
  Backend backend() const { return backend_; }

 private:
  struct RangeTree;
  struct KdTree;

  std::size_t dim_;
  Backend backend_;
  std::vector<RangePoint> points_;
  std::optional<RangeHit> global_;
  std::unique_ptr<RangeTree> range_tree_;
  std::unique_ptr<KdTree> kd_tree_;
};

std::optional<RangeHit> linear_scan_max(std::span<const RangePoint> points,
                                        std::span<const std::int64_t> lo,
                                        std::span<const std::int64_t> hi);

}  // namespace ecclab

#endif  // ECCLAB_RANGE_MAX_HPP_
