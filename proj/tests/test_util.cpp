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

#include "test_util.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace ecclab::test {

std::vector<std::vector<std::uint64_t>> floyd_warshall(const Graph& g) {
  std::size_t n = g.num_vertices();
  std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges()) {
    d[e.from][e.to] = std::min<std::uint64_t>(d[e.from][e.to], e.weight);
    if (g.is_undirected()) d[e.to][e.from] = std::min<std::uint64_t>(d[e.to][e.from], e.weight);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == kInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d[k][j] == kInf) continue;
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

std::uint64_t combine(Variant v, std::uint64_t to, std::uint64_t from) {
  switch (v) {
    case Variant::kUndirected:
    case Variant::kSource:
      return to;
    case Variant::kMax:
      return std::max(to, from);
    case Variant::kMin:
      return std::min(to, from);
    case Variant::kRoundtrip:
      return (to == kInf || from == kInf) ? kInf : to + from;
  }
  return kInf;
}

BruteEcc brute_eccentricities(const Graph& g, Variant v) {
  auto d = floyd_warshall(g);
  std::size_t n = g.num_vertices();
  BruteEcc r;
  r.ecc.assign(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t u = 0; u < n; ++u) {
      if (u != c) r.ecc[c] = std::max(r.ecc[c], combine(v, d[c][u], d[u][c]));
    }
  }
  r.radius = *std::min_element(r.ecc.begin(), r.ecc.end());
  r.diameter = *std::max_element(r.ecc.begin(), r.ecc.end());
  return r;
}

std::vector<std::vector<std::uint64_t>> dijkstra_matrix(const Graph& g) {
  std::size_t n = g.num_vertices();
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.from].push_back({e.to, e.weight});
    if (g.is_undirected()) adj[e.to].push_back({e.from, e.weight});
  }
  std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, kInf));
  using Item = std::pair<std::uint64_t, std::size_t>;
  for (std::size_t s = 0; s < n; ++s) {
    auto& row = d[s];
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    row[s] = 0;
    queue.push({0, s});
    while (!queue.empty()) {
      auto [du, u] = queue.top();
      queue.pop();
      if (du != row[u]) continue;
      for (auto [v, w] : adj[u]) {
        if (du + w < row[v]) {
          row[v] = du + w;
          queue.push({row[v], v});
        }
      }
    }
  }
  return d;
}

BruteEcc eccentricities_from_matrix(const std::vector<std::vector<std::uint64_t>>& d, Variant v) {
  std::size_t n = d.size();
  BruteEcc r;
  r.ecc.assign(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t u = 0; u < n; ++u) {
      if (u != c) r.ecc[c] = std::max(r.ecc[c], combine(v, d[c][u], d[u][c]));
    }
  }
  r.radius = *std::min_element(r.ecc.begin(), r.ecc.end());
  r.diameter = *std::max_element(r.ecc.begin(), r.ecc.end());
  return r;
}

bool gadget_low_case(const SetSystem& s) {
  return s.problem == SetProblem::kHittingSet ? naive_hitting(s) : !naive_orthogonal(s);
}

namespace {

bool has_cycle(const std::vector<std::vector<std::uint64_t>>& d) {
  for (std::size_t u = 0; u < d.size(); ++u) {
    for (std::size_t v = 0; v < d.size(); ++v) {
      if (u != v && d[u][v] != kInf && d[v][u] != kInf) return true;
    }
  }
  return false;
}

bool disjoint(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y) {
  for (auto e : x) {
    if (std::find(y.begin(), y.end(), e) != y.end()) return false;
  }
  return true;
}

}  // namespace

std::optional<std::string> gadget_violation(const GadgetOutput& g, const SetSystem& s) {
  auto d = dijkstra_matrix(g.graph);
  std::ostringstream msg;
  msg << g.kind << ": ";
  if (g.is_dag && has_cycle(d)) return msg.str() + "flagged acyclic but has a cycle";
  bool low = gadget_low_case(s);
  if (g.quantity == GadgetQuantity::kEccentricities) {
    auto ecc = eccentricities_from_matrix(d, g.variant).ecc;
    for (std::size_t i = 0; i < s.a.size(); ++i) {
      if (!g.witness_map[i]) return msg.str() + "missing vertex for a set";
      bool orthogonal = false;
      for (const auto& b : s.b) orthogonal = orthogonal || disjoint(s.a[i], b);
      std::uint64_t want = orthogonal ? 5 : 3;
      if (ecc[*g.witness_map[i]] != want) {
        msg << "set " << i << " has eccentricity " << ecc[*g.witness_map[i]] << " expected " << want;
        return msg.str();
      }
    }
    for (const auto& vc : g.vertex_checks) {
      if (to_distance(ecc[vc.vertex]) != vc.ecc) {
        msg << "vertex " << vc.vertex << " has eccentricity " << ecc[vc.vertex];
        return msg.str();
      }
    }
    return std::nullopt;
  }
  std::uint64_t observed = 0;
  if (g.quantity == GadgetQuantity::kMedian) {
    observed = kInf;
    for (const auto& row : d) {
      std::uint64_t sum = 0;
      for (auto x : row) sum = (sum == kInf || x == kInf) ? kInf : sum + x;
      observed = std::min(observed, sum);
    }
  } else {
    auto e = eccentricities_from_matrix(d, g.variant);
    observed = g.quantity == GadgetQuantity::kRadius ? e.radius : e.diameter;
  }
  Distance got = to_distance(observed);
  if (g.answer != (s.problem == SetProblem::kHittingSet ? low : !low)) {
    return msg.str() + "recorded answer disagrees with the naive solver";
  }
  if (low && got != g.yes_value) {
    msg << "observed " << got << " expected " << g.yes_value;
    return msg.str();
  }
  if (!low && got < g.no_bound) {
    msg << "observed " << got << " below " << g.no_bound;
    return msg.str();
  }
  return std::nullopt;
}

Distance to_distance(std::uint64_t d) { return d == kInf ? kInfinity : Distance(d); }

bool same(const std::vector<Distance>& got, const std::vector<std::uint64_t>& want) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (got[i] != to_distance(want[i])) return false;
  }
  return true;
}

namespace {

void for_each_subset(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs,
                     const std::function<void(const Graph&)>& fn) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) edges.push_back({pairs[i].first, pairs[i].second, 1});
    }
    fn(Graph(n, std::move(edges), false));
  }
}

}  // namespace

void for_each_digraph(std::size_t n, const std::function<void(const Graph&)>& fn) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) pairs.push_back({u, v});
    }
  }
  for_each_subset(n, pairs, fn);
}

void for_each_dag(std::size_t n, const std::function<void(const Graph&)>& fn) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  for_each_subset(n, pairs, fn);
}

void for_each_set_system(SetProblem p, std::size_t max_list, std::size_t d,
                         const std::function<void(const SetSystem&)>& fn) {
  std::size_t sets = std::size_t{1} << d;
  for (std::size_t na = 1; na <= max_list; ++na) {
    for (std::size_t nb = 1; nb <= max_list; ++nb) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < na + nb; ++i) total *= sets;
      for (std::size_t code = 0; code < total; ++code) {
        SetSystem s;
        s.problem = p;
        s.universe = d;
        std::size_t c = code;
        auto take = [&] {
          std::vector<std::uint32_t> set;
          std::size_t m = c % sets;
          c /= sets;
          for (std::uint32_t e = 0; e < d; ++e) {
            if (m >> e & 1) set.push_back(e);
          }
          return set;
        };
        for (std::size_t i = 0; i < na; ++i) s.a.push_back(take());
        for (std::size_t i = 0; i < nb; ++i) s.b.push_back(take());
        fn(s);
      }
    }
  }
}

namespace {

bool meets(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y) {
  for (auto e : x) {
    for (auto f : y) {
      if (e == f) return true;
    }
  }
  return false;
}

}  // namespace

bool naive_orthogonal(const SetSystem& s) {
  for (const auto& a : s.a) {
    for (const auto& b : s.b) {
      if (!meets(a, b)) return true;
    }
  }
  return false;
}

bool naive_hitting(const SetSystem& s) {
  for (const auto& a : s.a) {
    bool all = true;
    for (const auto& b : s.b) all = all && meets(a, b);
    if (all) return true;
  }
  return false;
}

Graph directed_path(std::size_t n) {
  GraphBuilder b;
  b.add_vertices(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph directed_cycle(std::size_t n) {
  GraphBuilder b;
  b.add_vertices(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return b.build();
}

Graph undirected_path(std::size_t n) {
  GraphBuilder b(true);
  b.add_vertices(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

}  // namespace ecclab::test
