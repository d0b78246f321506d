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

#include "ecclab/traversal.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <queue>
#include <string>

#include "ecclab/error.hpp"

namespace ecclab {
namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.num_vertices()) {
    throw InputError("vertex " + std::to_string(v) + " out of range");
  }
}

using Entry = std::pair<Distance::Value, Vertex>;
using MinHeap = std::priority_queue<Entry, std::vector<Entry>, std::greater<>>;

}  // namespace

DistanceVector shortest_paths(const Graph& g, Vertex source, Direction direction) {
  check_vertex(g, source);
  DistanceVector out{source, direction, std::vector<Distance>(g.num_vertices(), kInfinity)};
  auto& dist = out.dist;
  dist[source] = Distance(0);
  if (g.has_unit_weights()) {
    std::vector<Vertex> queue{source};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      Distance next = dist[u] + Distance(1);
      for (const Arc& a : g.arcs(u, direction)) {
        if (dist[a.head].is_infinite()) {
          dist[a.head] = next;
          queue.push_back(a.head);
        }
      }
    }
    return out;
  }
  MinHeap heap;
  heap.push({0, source});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (Distance(d) != dist[u]) continue;
    for (const Arc& a : g.arcs(u, direction)) {
      Distance cand(d + a.weight);
      if (cand < dist[a.head]) {
        dist[a.head] = cand;
        heap.push({d + a.weight, a.head});
      }
    }
  }
  return out;
}

std::vector<std::pair<Vertex, Distance>> truncated_shortest_paths(const Graph& g, Vertex source,
                                                                  std::size_t k,
                                                                  Direction direction) {
  check_vertex(g, source);
  if (k == 0 || k > g.num_vertices()) throw InputError("truncated search needs 1 <= k <= n");
  // Settle in distance order until the k-th settled distance is exceeded, then
  // sort the settled set by (distance, id) so zero-weight ties resolve by id.
  std::vector<std::pair<Vertex, Distance>> settled;
  std::vector<Distance> dist(g.num_vertices(), kInfinity);
  std::vector<char> done(g.num_vertices(), 0);
  MinHeap heap;
  dist[source] = Distance(0);
  heap.push({0, source});
  Distance cutoff = kInfinity;
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (done[u] || Distance(d) != dist[u]) continue;
    if (Distance(d) > cutoff) break;
    done[u] = 1;
    settled.push_back({u, dist[u]});
    if (settled.size() == k) cutoff = dist[u];
    for (const Arc& a : g.arcs(u, direction)) {
      Distance cand(d + a.weight);
      if (cand < dist[a.head]) {
        dist[a.head] = cand;
        heap.push({d + a.weight, a.head});
      }
    }
  }
  std::sort(settled.begin(), settled.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  if (settled.size() > k) settled.resize(k);
  return settled;
}

std::vector<Vertex> topological_order(const Graph& g) {
  std::size_t n = g.num_vertices();
  if (g.is_undirected() && g.num_edges() > 0) throw CyclicError();
  std::vector<std::size_t> indeg(n, 0);
  for (Vertex v = 0; v < n; ++v) indeg[v] = g.in(v).size();
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<Vertex> order;
  order.reserve(n);
  while (!ready.empty()) {
    Vertex u = ready.top();
    ready.pop();
    order.push_back(u);
    for (const Arc& a : g.out(u)) {
      if (--indeg[a.head] == 0) ready.push(a.head);
    }
  }
  if (order.size() != n) throw CyclicError();
  return order;
}

Condensation condense_scc(const Graph& g) {
  // Iterative Tarjan. Tarjan emits components in reverse topological order.
  std::size_t n = g.num_vertices();
  constexpr std::size_t kUnset = ~std::size_t{0};
  std::vector<std::size_t> index(n, kUnset), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::size_t> tarjan_comp(n, 0);
  std::size_t counter = 0, comps = 0;
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> call;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      auto out = g.out(f.v);
      if (f.next < out.size()) {
        Vertex w = out[f.next++].head;
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      Vertex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          tarjan_comp[w] = comps;
        } while (w != v);
        ++comps;
      }
    }
  }
  Condensation c;
  c.num_components = comps;
  c.component.resize(n);
  for (Vertex v = 0; v < n; ++v) c.component[v] = static_cast<Vertex>(comps - 1 - tarjan_comp[v]);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (const Arc& a : g.out(u)) {
      if (c.component[u] != c.component[a.head]) {
        edges.push_back({c.component[u], c.component[a.head], 1});
      }
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const Edge& a, const Edge& b) {
                            return a.from == b.from && a.to == b.to;
                          }),
              edges.end());
  c.dag = Graph::directed(comps, std::move(edges));
  return c;
}

std::vector<Vertex> sample_vertex_set(std::size_t n, std::size_t size, Rng& rng) {
  if (size > n) throw InputError("sample size exceeds vertex count");
  std::vector<Vertex> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Vertex>(i);
  for (std::size_t i = 0; i < size; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

Distance max_excluding(const std::vector<Distance>& dist, Vertex source) {
  Distance best(0);
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (v != source) best = std::max(best, dist[v]);
  }
  return best;
}

}  // namespace ecclab
