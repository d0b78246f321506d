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

#ifndef ECCLAB_GENERATORS_HPP_
#define ECCLAB_GENERATORS_HPP_

#include <cstddef>

#include "ecclab/graph.hpp"
#include "ecclab/rng.hpp"

namespace ecclab {

struct RandomGraphOptions {
  std::size_t n = 0;
  std::size_t m = 0;
  // Weights uniform in [1, max_weight]; 1 gives an unweighted graph.
  Weight max_weight = 1;
  // Directed: add a random out-arborescence from a random root first.
  // DAG: add the path 0 -> 1 -> ... -> n-1 first (every pair comparable).
  bool planted = false;
};

// Uniform random arcs without self-loops (parallel arcs possible).
Graph random_digraph(const RandomGraphOptions& opt, Rng& rng);
// Arcs go from lower to higher id.
Graph random_dag(const RandomGraphOptions& opt, Rng& rng);
// planted adds a random spanning tree.
Graph random_undirected(const RandomGraphOptions& opt, Rng& rng);

// Each undirected edge becomes one arc in a random direction, or both arcs
// with probability both_prob.
Graph random_orientation(const Graph& g, double both_prob, Rng& rng);
// Reweights every edge uniformly in [1, max_weight].
Graph with_random_weights(const Graph& g, Weight max_weight, Rng& rng);

}  // namespace ecclab

#endif  // ECCLAB_GENERATORS_HPP_
