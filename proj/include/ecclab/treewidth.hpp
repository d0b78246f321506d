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

#ifndef ECCLAB_TREEWIDTH_HPP_
#define ECCLAB_TREEWIDTH_HPP_

#include <vector>

#include "ecclab/graph.hpp"
#include "ecclab/oracle.hpp"
#include "ecclab/tree_decomposition.hpp"

namespace ecclab {

// side and complement partition the vertices; portals are the vertices of
// side with an edge (either direction) to complement. All lists sorted.
struct PortalSplit {
  std::vector<Vertex> side;
  std::vector<Vertex> portals;
  std::vector<Vertex> complement;
};

// Chooses a bag b and a subset Y of b with |Y| <= width; side is Y plus the
// branches of the decomposition at b whose separator with b lies inside Y.
// The most balanced such split is returned. Requires n > width + 1.
PortalSplit find_portal_split(const Graph& g, const TreeDecomposition& td);

// Graph on `vertices` (relabeled in order) with every original edge inside
// plus, for each ordered portal pair, an edge weighted by their distance in g.
// Portals must be a subset of vertices.
Graph augment_with_portals(const Graph& g, const std::vector<Vertex>& vertices,
                           const std::vector<Vertex>& portals);

// Exact eccentricities by portal recursion with three-layer farthest queries.
EccentricityReport tw_eccentricities(const Graph& g, const TreeDecomposition& td, Variant v);

}  // namespace ecclab

#endif  // ECCLAB_TREEWIDTH_HPP_
