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

#include "ecclab/graph.hpp"

#include <algorithm>
#include <string>

#include "ecclab/error.hpp"

namespace ecclab {
namespace {

void fill_csr(std::size_t n, const std::vector<Edge>& arcs, bool by_target,
              std::vector<std::size_t>& begin, std::vector<Arc>& out) {
  begin.assign(n + 1, 0);
  for (const Edge& e : arcs) ++begin[(by_target ? e.to : e.from) + 1];
  for (std::size_t v = 0; v < n; ++v) begin[v + 1] += begin[v];
  out.resize(arcs.size());
  std::vector<std::size_t> pos(begin.begin(), begin.end() - 1);
  for (const Edge& e : arcs) {
    Vertex tail = by_target ? e.to : e.from;
    Vertex head = by_target ? e.from : e.to;
    out[pos[tail]++] = {head, e.weight};
  }
  // Deterministic neighbor order.
  for (std::size_t v = 0; v < n; ++v) {
    std::stable_sort(out.begin() + begin[v], out.begin() + begin[v + 1],
                     [](const Arc& a, const Arc& b) { return a.head < b.head; });
  }
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges, bool undirected)
    : n_(n), undirected_(undirected), edges_(std::move(edges)) {
  std::vector<Edge> arcs;
  arcs.reserve(edges_.size() * (undirected_ ? 2 : 1));
  for (const Edge& e : edges_) {
    if (e.from >= n_ || e.to >= n_) {
      throw InputError("edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                       ") out of range for n=" + std::to_string(n_));
    }
    if (e.from == e.to) throw InputError("self-loop at vertex " + std::to_string(e.from));
    if (e.weight != 1) unit_weights_ = false;
    max_weight_ = std::max(max_weight_, e.weight);
    arcs.push_back(e);
    if (undirected_) arcs.push_back({e.to, e.from, e.weight});
  }
  fill_csr(n_, arcs, false, out_begin_, out_arcs_);
  fill_csr(n_, arcs, true, in_begin_, in_arcs_);
}

Graph Graph::reversed() const {
  if (undirected_) return *this;
  std::vector<Edge> rev;
  rev.reserve(edges_.size());
  for (const Edge& e : edges_) rev.push_back({e.to, e.from, e.weight});
  return Graph(n_, std::move(rev), false);
}

Graph Graph::as_directed() const {
  if (!undirected_) return *this;
  std::vector<Edge> arcs;
  arcs.reserve(2 * edges_.size());
  for (const Edge& e : edges_) {
    arcs.push_back(e);
    arcs.push_back({e.to, e.from, e.weight});
  }
  return Graph(n_, std::move(arcs), false);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> local(g.num_vertices(), kAbsent);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.from] != kAbsent && local[e.to] != kAbsent) {
      edges.push_back({local[e.from], local[e.to], e.weight});
    }
  }
  return Graph(vertices.size(), std::move(edges), g.is_undirected());
}

}  // namespace ecclab
