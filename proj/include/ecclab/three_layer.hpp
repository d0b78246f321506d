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

#ifndef ECCLAB_THREE_LAYER_HPP_
#define ECCLAB_THREE_LAYER_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "ecclab/distance.hpp"

namespace ecclab {

// Layers A, B, C with arcs only A -> B and B -> C.
struct ThreeLayerInstance {
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  std::size_t size_c = 0;
  std::vector<Distance> ab;  // size_a x size_b, row-major
  std::vector<Distance> bc;  // size_b x size_c, row-major

  ThreeLayerInstance() = default;
  ThreeLayerInstance(std::size_t a, std::size_t b, std::size_t c)
      : size_a(a), size_b(b), size_c(c), ab(a * b, kInfinity), bc(b * c, kInfinity) {}
  Distance& d_ab(std::size_t a, std::size_t b) { return ab[a * size_b + b]; }
  Distance d_ab(std::size_t a, std::size_t b) const { return ab[a * size_b + b]; }
  Distance& d_bc(std::size_t b, std::size_t c) { return bc[b * size_c + c]; }
  Distance d_bc(std::size_t b, std::size_t c) const { return bc[b * size_c + c]; }
};

struct Farthest {
  // 0 with no witness when C is empty.
  Distance dist;
  std::optional<std::size_t> witness;
};

// For every a: max over c of min over b of d_ab(a,b) + d_bc(b,c), answered
// with one range-max index per b.
std::vector<Farthest> three_layer_farthest(const ThreeLayerInstance& inst);

// Direct triple loop.
std::vector<Farthest> three_layer_farthest_naive(const ThreeLayerInstance& inst);

}  // namespace ecclab

#endif  // ECCLAB_THREE_LAYER_HPP_
