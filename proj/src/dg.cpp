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

#include "ecclab/dg.hpp"

#include <algorithm>
#include <bit>

#include <sstream>

#include "ecclab/error.hpp"
#include "ecclab/traversal.hpp"

namespace ecclab {

bool dg_descends(std::size_t node, std::size_t ancestor) {
  if (ancestor == 0) return false;
  while (node > ancestor) node >>= 1;
  return node == ancestor;
}

DgFragment add_dg(GraphBuilder& builder, const std::vector<Vertex>& x, std::size_t stretch) {
  if (stretch == 0) throw InputError("stretch must be at least 1");
  DgFragment f;
  f.stretch = stretch;
  f.leaves = x;
  f.padded_size = std::bit_ceil(std::max<std::size_t>(x.size(), 1));
  std::size_t p = f.padded_size;
  // copies[node] lists the vertices standing for a tree node.
  std::vector<std::vector<Vertex>> copies(2 * p);
  for (std::size_t node = 1; node < p; ++node) {
    for (std::size_t c = 0; c < stretch; ++c) copies[node].push_back(builder.add_vertex());
    for (std::size_t c = 0; c + 1 < stretch; ++c) {
      builder.add_edge(copies[node][c], copies[node][c + 1]);
    }
  }
  for (std::size_t i = 0; i < p; ++i) {
    copies[p + i].push_back(i < x.size() ? x[i] : builder.add_vertex());
  }
  for (std::size_t node = 1; node < 2 * p; ++node) {
    for (Vertex v : copies[node]) {
      f.vertices.push_back(v);
      f.node.push_back(node);
      f.is_leaf.push_back(node >= p);
      f.is_input.push_back(node >= p && node - p < x.size());
    }
    for (std::size_t child = node, anc = node >> 1; anc >= 1; child = anc, anc >>= 1) {
      if ((child & 1) == 0) {
        for (Vertex v : copies[node]) builder.add_edge(v, copies[anc].front());
      } else {
        for (Vertex v : copies[node]) builder.add_edge(copies[anc].back(), v);
      }
    }
  }
  return f;
}

DgGraph build_dg(std::size_t size, std::size_t stretch) {
  GraphBuilder builder;
  std::vector<Vertex> x;
  for (std::size_t i = 0; i < size; ++i) x.push_back(builder.add_vertex());
  DgFragment f = add_dg(builder, x, stretch);
  return DgGraph{builder.build(), std::move(f)};
}

std::optional<std::string> check_dg_distances(const Graph& g, const DgFragment& f) {
  try {
    topological_order(g);
  } catch (const CyclicError&) {
    return "fragment has a directed cycle";
  }
  std::size_t k = f.vertices.size();
  std::vector<std::vector<Distance>> fwd(k);
  for (std::size_t i = 0; i < k; ++i) fwd[i] = shortest_paths(g, f.vertices[i]).dist;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      Distance d = std::min(fwd[i][f.vertices[j]], fwd[j][f.vertices[i]]);
      bool related = dg_descends(f.node[i], f.node[j]) || dg_descends(f.node[j], f.node[i]);
      bool ok = related ? d <= Distance(f.stretch) : d == Distance(f.stretch + 1);
      if (!ok) {
        std::ostringstream msg;
        msg << "min-distance " << d << " between vertices " << f.vertices[i] << " and "
            << f.vertices[j] << (related ? " (related)" : " (unrelated)");
        return msg.str();
      }
    }
  }
  for (std::size_t i = 0; i < f.leaves.size(); ++i) {
    auto dist = shortest_paths(g, f.leaves[i]).dist;
    for (std::size_t j = 0; j < i; ++j) {
      if (dist[f.leaves[j]].is_finite()) return "a leaf reaches an earlier leaf";
    }
  }
  return std::nullopt;
}

}  // namespace ecclab
