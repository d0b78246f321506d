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

#ifndef ECCLAB_HASH_REDUCTION_HPP_
#define ECCLAB_HASH_REDUCTION_HPP_

#include <cstddef>
#include <string>

#include "ecclab/graph.hpp"
#include "ecclab/rng.hpp"

namespace ecclab {

enum class DecisionTarget { kDiameter, kRadius };

std::string to_string(DecisionTarget t);
DecisionTarget parse_decision_target(const std::string& s);

struct HashReductionOptions {
  std::size_t delta = 0;  // degree threshold; 0 means ceil(sqrt(n))
  std::size_t rounds = 20;
};

struct HashReductionResult {
  int value = 2;                     // 2 or 3
  std::size_t delta = 0;             // threshold actually used
  std::size_t high_degree = 0;       // vertices handled by traversal
  std::size_t rounds_run = 0;
  bool decided_by_traversal = false;
};

// Decides 2 versus 3 for the diameter or radius of an undirected unweighted
// graph promised to have that value in {2, 3}. Vertices of degree >= delta
// are handled by BFS; every other vertex is represented by its closed
// neighborhood hashed into 10*delta^2 coordinates, and each round asks a
// set-system question about those vectors. Hash collisions only merge
// coordinates, so a value of 3 for the diameter (and 2 for the radius) is
// always correct; the other answer can be wrong with probability that
// shrinks geometrically in the number of rounds.
HashReductionResult reduce_decision23(const Graph& g, DecisionTarget target,
                                      const HashReductionOptions& options, Rng& rng);

}  // namespace ecclab

#endif  // ECCLAB_HASH_REDUCTION_HPP_
