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

#ifndef ECCLAB_TRAVERSAL_HPP_
#define ECCLAB_TRAVERSAL_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "ecclab/distance.hpp"
#include "ecclab/graph.hpp"
#include "ecclab/rng.hpp"

namespace ecclab {

struct DistanceVector {
  Vertex source = 0;
  Direction direction = Direction::kForward;
  std::vector<Distance> dist;
};

// BFS on unit-weight graphs, binary-heap Dijkstra otherwise. Backward gives
// d(v -> source).
DistanceVector shortest_paths(const Graph& g, Vertex source,
                              Direction direction = Direction::kForward);

// The k closest vertices ordered by (distance, id); only reachable ones.
std::vector<std::pair<Vertex, Distance>> truncated_shortest_paths(
    const Graph& g, Vertex source, std::size_t k, Direction direction = Direction::kForward);

// Kahn's algorithm with smallest-id tie-break. Throws CyclicError.
std::vector<Vertex> topological_order(const Graph& g);

struct Condensation {
  // component[v]; components are numbered in a topological order of dag.
  std::vector<Vertex> component;
  std::size_t num_components = 0;
  Graph dag;
};

Condensation condense_scc(const Graph& g);

// Uniform sample without replacement, returned sorted.
std::vector<Vertex> sample_vertex_set(std::size_t n, std::size_t size, Rng& rng);

// max over v != source of dist[v]; 0 for a single vertex.
Distance max_excluding(const std::vector<Distance>& dist, Vertex source);

}  // namespace ecclab

#endif  // ECCLAB_TRAVERSAL_HPP_
