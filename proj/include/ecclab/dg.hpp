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

#ifndef ECCLAB_DG_HPP_
#define ECCLAB_DG_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ecclab/graph.hpp"

namespace ecclab {

// DAG over an ordered list X built on a complete binary tree whose leaves are
// X padded to a power of two. Tree nodes are numbered heap style: the root is
// 1 and leaf i is padded_size + i. Every internal node becomes a path of
// `stretch` copies. A node reaches each ancestor it lies left of in one step,
// and each ancestor it lies right of reaches it in one step, so two nodes with
// neither an ancestor of the other are joined through their lowest common
// ancestor by a path of length stretch + 1.
struct DgFragment {
  std::size_t stretch = 1;
  std::size_t padded_size = 1;
  std::vector<Vertex> leaves;     // the vertices of X, in order
  std::vector<Vertex> vertices;   // every vertex of the fragment
  std::vector<std::size_t> node;  // tree node of vertices[i]
  std::vector<bool> is_leaf;      // vertices[i] is a leaf (X or padding)
  std::vector<bool> is_input;     // vertices[i] belongs to X
};

// Adds padding leaves, tree copies and all fragment arcs to builder.
DgFragment add_dg(GraphBuilder& builder, const std::vector<Vertex>& x, std::size_t stretch);

struct DgGraph {
  Graph graph;
  DgFragment fragment;
};

// Standalone fragment over X = vertices 0 .. size-1.
DgGraph build_dg(std::size_t size, std::size_t stretch);

// Checks, over every ordered pair of fragment vertices, that the min-distance
// is at most stretch when one tree node lies below the other and exactly
// stretch + 1 otherwise, that the graph is acyclic, and that no leaf of X
// reaches an earlier one. Returns a description of the first violation.
std::optional<std::string> check_dg_distances(const Graph& g, const DgFragment& f);

// True when tree node `node` equals `ancestor` or lies below it.
bool dg_descends(std::size_t node, std::size_t ancestor);

}  // namespace ecclab

#endif  // ECCLAB_DG_HPP_
