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

#ifndef ECCLAB_TREE_DECOMPOSITION_HPP_
#define ECCLAB_TREE_DECOMPOSITION_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ecclab/graph.hpp"
#include "ecclab/rng.hpp"

namespace ecclab {

struct TreeDecomposition {
  std::size_t num_vertices = 0;
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;

  std::size_t max_bag_size() const;
  // max bag size - 1 (0 for an empty decomposition).
  std::size_t width() const;

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

// Checks coverage of vertices and edges (underlying undirected graph), that
// the bag graph is a tree, and that each vertex's bags are connected.
// Throws ValidationError naming the violated invariant.
void validate_decomposition(const Graph& g, const TreeDecomposition& td);

// PACE .td text: `s td <#bags> <width+1> <n>`, `b <id> <v>...`, `<b1> <b2>`.
// Bag ids and vertices are 1-based in the file; `c` lines are comments.
std::string write_td(const TreeDecomposition& td);
TreeDecomposition read_td(const std::string& text);

// Elimination by minimum degree. Valid, but with no width guarantee.
TreeDecomposition greedy_min_degree_decomposition(const Graph& g);

struct PartialKTree {
  Graph graph;
  TreeDecomposition decomposition;
};

// Random k-tree on n vertices (seed clique plus attachments to random
// k-cliques), each non-seed edge kept with probability keep_prob; the k-tree's
// own decomposition (width k) is returned. Requires n > k >= 1.
PartialKTree generate_partial_ktree(std::size_t n, std::size_t k, double keep_prob, Rng& rng);

}  // namespace ecclab

#endif  // ECCLAB_TREE_DECOMPOSITION_HPP_
