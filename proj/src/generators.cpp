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

#include "ecclab/generators.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "ecclab/error.hpp"

namespace ecclab {
namespace {

Weight draw_weight(Weight max_weight, Rng& rng) {
  if (max_weight <= 1) return 1;
  return std::uniform_int_distribution<Weight>(1, max_weight)(rng);
}

std::vector<Vertex> permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

Graph random_digraph(const RandomGraphOptions& opt, Rng& rng) {
  std::vector<Edge> edges;
  if (opt.n < 2) return Graph::directed(opt.n, {});
  if (opt.planted) {
    auto p = permutation(opt.n, rng);
    for (std::size_t i = 1; i < opt.n; ++i) {
      std::size_t parent = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
      edges.push_back({p[parent], p[i], draw_weight(opt.max_weight, rng)});
    }
  }
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(opt.n - 1));
  while (edges.size() < opt.m) {
    Vertex u = pick(rng), v = pick(rng);
    if (u != v) edges.push_back({u, v, draw_weight(opt.max_weight, rng)});
  }
  return Graph::directed(opt.n, std::move(edges));
}

Graph random_dag(const RandomGraphOptions& opt, Rng& rng) {
  std::vector<Edge> edges;
  if (opt.n < 2) return Graph::directed(opt.n, {});
  if (opt.planted) {
    for (std::size_t i = 0; i + 1 < opt.n; ++i) {
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1),
                       draw_weight(opt.max_weight, rng)});
    }
  }
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(opt.n - 1));
  while (edges.size() < opt.m) {
    Vertex u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    edges.push_back({u, v, draw_weight(opt.max_weight, rng)});
  }
  return Graph::directed(opt.n, std::move(edges));
}

Graph random_undirected(const RandomGraphOptions& opt, Rng& rng) {
  std::vector<Edge> edges;
  if (opt.n < 2) return Graph::undirected(opt.n, {});
  if (opt.planted) {
    auto p = permutation(opt.n, rng);
    for (std::size_t i = 1; i < opt.n; ++i) {
      std::size_t parent = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
      edges.push_back({p[parent], p[i], draw_weight(opt.max_weight, rng)});
    }
  }
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(opt.n - 1));
  while (edges.size() < opt.m) {
    Vertex u = pick(rng), v = pick(rng);
    if (u != v) edges.push_back({u, v, draw_weight(opt.max_weight, rng)});
  }
  return Graph::undirected(opt.n, std::move(edges));
}

Graph random_orientation(const Graph& g, double both_prob, Rng& rng) {
  std::vector<Edge> arcs;
  std::bernoulli_distribution both(both_prob), flip(0.5);
  for (const Edge& e : g.edges()) {
    if (both(rng)) {
      arcs.push_back(e);
      arcs.push_back({e.to, e.from, e.weight});
    } else if (flip(rng)) {
      arcs.push_back({e.to, e.from, e.weight});
    } else {
      arcs.push_back(e);
    }
  }
  return Graph::directed(g.num_vertices(), std::move(arcs));
}

Graph with_random_weights(const Graph& g, Weight max_weight, Rng& rng) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.weight = draw_weight(max_weight, rng);
  return Graph(g.num_vertices(), std::move(edges), g.is_undirected());
}

}  // namespace ecclab
