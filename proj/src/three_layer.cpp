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

#include "ecclab/three_layer.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "ecclab/range_max.hpp"

namespace ecclab {

std::vector<Farthest> three_layer_farthest_naive(const ThreeLayerInstance& inst) {
  std::vector<Farthest> out(inst.size_a, Farthest{Distance(0), std::nullopt});
  for (std::size_t a = 0; a < inst.size_a; ++a) {
    for (std::size_t c = 0; c < inst.size_c; ++c) {
      Distance best = kInfinity;
      for (std::size_t b = 0; b < inst.size_b; ++b) {
        best = std::min(best, inst.d_ab(a, b) + inst.d_bc(b, c));
      }
      if (!out[a].witness || best > out[a].dist) out[a] = {best, c};
    }
  }
  return out;
}

std::vector<Farthest> three_layer_farthest(const ThreeLayerInstance& inst) {
  std::size_t nb = inst.size_b;
  std::vector<Farthest> out(inst.size_a, Farthest{Distance(0), std::nullopt});
  if (inst.size_c == 0) return out;
  if (nb == 0) {
    for (auto& f : out) f = {kInfinity, 0};
    return out;
  }
  // Infinity is replaced by a finite stand-in larger than any two-hop sum of
  // finite entries; sums reaching it decode back to infinity.
  Distance::Value max_finite = 0;
  for (Distance d : inst.ab) {
    if (d.is_finite()) max_finite = std::max(max_finite, d.value());
  }
  for (Distance d : inst.bc) {
    if (d.is_finite()) max_finite = std::max(max_finite, d.value());
  }
  const auto big = static_cast<std::int64_t>(2 * max_finite + 1);
  auto clamp = [&](Distance d) {
    return d.is_finite() ? static_cast<std::int64_t>(d.value()) : big;
  };

  // index[b] ranks by distance; first[b] holds the same boxes ranked by
  // smallest c, for rows where every sum through b is infinite.
  std::vector<RangeMaxIndex> index, first;
  index.reserve(nb);
  first.reserve(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    std::vector<RangePoint> points(inst.size_c);
    for (std::size_t c = 0; c < inst.size_c; ++c) {
      std::int64_t base = clamp(inst.d_bc(b, c));
      RangePoint& p = points[c];
      for (std::size_t other = 0; other < nb; ++other) {
        if (other != b) p.coords.push_back(clamp(inst.d_bc(other, c)) - base);
      }
      p.value = base;
      p.payload = c;
    }
    std::vector<RangePoint> by_index = points;
    for (RangePoint& p : by_index) p.value = -static_cast<std::int64_t>(p.payload);
    index.emplace_back(nb - 1, std::move(points));
    first.emplace_back(nb - 1, std::move(by_index));
  }

  std::vector<std::int64_t> lo(nb - 1), hi(nb - 1, std::numeric_limits<std::int64_t>::max());
  for (std::size_t a = 0; a < inst.size_a; ++a) {
    std::optional<RangeHit> best;
    for (std::size_t b = 0; b < nb; ++b) {
      std::int64_t here = clamp(inst.d_ab(a, b));
      std::size_t k = 0;
      for (std::size_t other = 0; other < nb; ++other) {
        if (other != b) lo[k++] = here - clamp(inst.d_ab(a, other));
      }
      auto hit = here >= big ? first[b].query(lo, hi) : index[b].query(lo, hi);
      if (!hit) continue;
      RangeHit total{here >= big ? big : std::min(here + hit->value, big), hit->payload};
      if (!best || better_hit(total, *best)) best = total;
    }
    // Every c lies in the box of its minimizing b, so best is set.
    Distance d = best->value >= big ? kInfinity
                                    : Distance(static_cast<Distance::Value>(best->value));
    out[a] = {d, best->payload};
  }
  return out;
}

}  // namespace ecclab
