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

#ifndef ECCLAB_GRAPH_HPP_
#define ECCLAB_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ecclab {

using Vertex = std::uint32_t;
using Weight = std::uint32_t;

struct Edge {
  Vertex from = 0;
  Vertex to = 0;
  Weight weight = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  Vertex head = 0;
  Weight weight = 1;
};

enum class Direction { kForward, kBackward };

// Immutable adjacency structure. Undirected graphs keep the edge list as given
// (each edge once) and store both orientations in the adjacency arrays.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::vector<Edge> edges, bool undirected);

  static Graph directed(std::size_t n, std::vector<Edge> edges) {
    return Graph(n, std::move(edges), false);
  }
  static Graph undirected(std::size_t n, std::vector<Edge> edges) {
    return Graph(n, std::move(edges), true);
  }

  std::size_t num_vertices() const { return n_; }
  // Number of edges as listed (an undirected edge counts once).
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_arcs() const { return out_arcs_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool is_undirected() const { return undirected_; }
  bool has_unit_weights() const { return unit_weights_; }
  Weight max_weight() const { return max_weight_; }

  std::span<const Arc> out(Vertex v) const {
    return {out_arcs_.data() + out_begin_[v], out_arcs_.data() + out_begin_[v + 1]};
  }
  std::span<const Arc> in(Vertex v) const {
    return {in_arcs_.data() + in_begin_[v], in_arcs_.data() + in_begin_[v + 1]};
  }
  std::span<const Arc> arcs(Vertex v, Direction d) const {
    return d == Direction::kForward ? out(v) : in(v);
  }

  // Every edge reversed. Undirected graphs are returned unchanged.
  Graph reversed() const;
  // Same arcs, undirected flag dropped; undirected edges become two arcs.
  Graph as_directed() const;

 private:
  std::size_t n_ = 0;
  bool undirected_ = false;
  bool unit_weights_ = true;
  Weight max_weight_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_begin_{0};
  std::vector<Arc> out_arcs_;
  std::vector<std::size_t> in_begin_{0};
  std::vector<Arc> in_arcs_;
};

// Incremental edge collection for constructors that allocate vertices on the fly.
class GraphBuilder {
 public:
  explicit GraphBuilder(bool undirected = false) : undirected_(undirected) {}

  Vertex add_vertex() { return static_cast<Vertex>(n_++); }
  Vertex add_vertices(std::size_t count) {
    Vertex first = static_cast<Vertex>(n_);
    n_ += count;
    return first;
  }
  void add_edge(Vertex u, Vertex v, Weight w = 1) { edges_.push_back({u, v, w}); }
  std::size_t num_vertices() const { return n_; }
  Graph build() const { return Graph(n_, edges_, undirected_); }

 private:
  bool undirected_;
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// Subgraph induced by `vertices` (relabeled 0..k-1 in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace ecclab

#endif  // ECCLAB_GRAPH_HPP_
