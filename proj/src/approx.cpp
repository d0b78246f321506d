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

#include "ecclab/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ecclab/error.hpp"
#include "ecclab/parallel.hpp"
#include "ecclab/traversal.hpp"

namespace ecclab {

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::size_t hitting_set_size(std::size_t n, double base, double c) {
  if (n == 0) return 0;
  double want = std::ceil(c * base * std::log(static_cast<double>(n)) - 1e-9);
  std::size_t size = want < 1 ? 1 : static_cast<std::size_t>(want);
  return std::min(n, size);
}

namespace {

std::vector<std::vector<Distance>> forward_rows(const Graph& g, const std::vector<Vertex>& from,
                                                Direction dir = Direction::kForward) {
  std::vector<std::vector<Distance>> rows(from.size());
  parallel_for(from.size(), [&](std::size_t i) { rows[i] = shortest_paths(g, from[i], dir).dist; });
  return rows;
}

// Positions in a topological order, with arcs stored by position.
struct TopoDag {
  std::vector<Vertex> vertex_at;
  std::vector<std::vector<Arc>> out;
  std::vector<std::vector<Arc>> in;

  explicit TopoDag(const Graph& g) : vertex_at(topological_order(g)) {
    std::size_t n = g.num_vertices();
    std::vector<Vertex> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[vertex_at[i]] = static_cast<Vertex>(i);
    out.resize(n);
    in.resize(n);
    for (const Edge& e : g.edges()) {
      out[pos[e.from]].push_back({pos[e.to], e.weight});
      in[pos[e.to]].push_back({pos[e.from], e.weight});
    }
  }
  std::size_t size() const { return vertex_at.size(); }

  // dist[v - lo] = d(v -> w) inside the induced interval [lo, w].
  void to_target(std::size_t lo, std::size_t w, std::vector<Distance>& dist) const {
    dist.assign(w - lo + 1, kInfinity);
    dist[w - lo] = Distance(0);
    for (std::size_t p = w; p-- > lo;) {
      Distance best = kInfinity;
      for (const Arc& a : out[p]) {
        if (a.head <= w) best = std::min(best, dist[a.head - lo] + Distance(a.weight));
      }
      dist[p - lo] = best;
    }
  }
  // dist[v - w] = d(w -> v) inside the induced interval [w, hi].
  void from_source(std::size_t w, std::size_t hi, std::vector<Distance>& dist) const {
    dist.assign(hi - w + 1, kInfinity);
    dist[0] = Distance(0);
    for (std::size_t p = w + 1; p <= hi; ++p) {
      Distance best = kInfinity;
      for (const Arc& a : in[p]) {
        if (a.head >= w) best = std::min(best, dist[a.head - w] + Distance(a.weight));
      }
      dist[p - w] = best;
    }
  }
};

Distance doubled(Distance r) { return r + r; }

Rational upper_bound_rational(double x) {
  // Smallest k/1000000 >= x.
  constexpr std::uint64_t kDen = 1000000;
  double scaled = std::ceil(x * kDen - 1e-6);
  auto num = static_cast<std::uint64_t>(scaled);
  std::uint64_t g = std::gcd(num, kDen);
  return {num / g, kDen / g};
}

// bad[i] == 0 iff every node before i reaches i (nodes in topological order).
std::vector<bool> reached_by_all_before(const std::vector<std::vector<Vertex>>& out) {
  std::size_t k = out.size();
  std::vector<std::size_t> first_hits(k, 0);
  for (std::size_t u = 0; u < k; ++u) {
    if (out[u].empty()) continue;
    first_hits[*std::min_element(out[u].begin(), out[u].end())]++;
  }
  std::vector<bool> ok(k, false);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (i > 0) bad = bad + 1 - first_hits[i];
    ok[i] = bad == 0;
  }
  return ok;
}

}  // namespace

ApproxResult approx_source_radius(const Graph& g, Rng& rng, double c) {
  std::size_t n = g.num_vertices();
  if (n == 0) throw InputError("source radius of an empty graph");
  double root = std::sqrt(static_cast<double>(n));
  auto s1 = sample_vertex_set(n, hitting_set_size(n, root, c), rng);
  auto rows1 = forward_rows(g, s1);

  Vertex w = 0;
  Distance w_value(0);
  for (Vertex v = 0; v < n; ++v) {
    Distance closest = kInfinity;
    for (const auto& row : rows1) closest = std::min(closest, row[v]);
    if (v == 0 || closest > w_value) {
      w = v;
      w_value = closest;
    }
  }
  auto k = static_cast<std::size_t>(std::ceil(root - 1e-9));
  std::vector<Vertex> s2;
  for (const auto& [v, d] : truncated_shortest_paths(g, w, k, Direction::kBackward)) s2.push_back(v);
  auto rows2 = forward_rows(g, s2);

  ApproxResult r;
  r.estimate = kInfinity;
  r.upper = {2, 1};
  r.whp = true;
  auto consider = [&](Vertex s, const std::vector<Distance>& row) {
    Distance e = max_excluding(row, s);
    if (!r.witness_center || e < r.estimate || (e == r.estimate && s < *r.witness_center)) {
      r.estimate = e;
      r.witness_center = s;
    }
  };
  for (std::size_t i = 0; i < s1.size(); ++i) consider(s1[i], rows1[i]);
  for (std::size_t i = 0; i < s2.size(); ++i) consider(s2[i], rows2[i]);
  return r;
}

ApproxResult approx_min_diameter(const Graph& g, Rational epsilon, Rng& rng, double c) {
  std::size_t n = g.num_vertices();
  if (!g.has_unit_weights()) throw InputError("min-diameter approximation needs unit weights");
  if (epsilon.den == 0 || epsilon.num == 0 || epsilon.num > epsilon.den) {
    throw InputError("epsilon must lie in (0, 1]");
  }
  if (n == 0) throw InputError("min-diameter of an empty graph");
  double eps = epsilon.to_double();
  auto sample = sample_vertex_set(
      n, hitting_set_size(n, std::pow(static_cast<double>(n), 1.0 - eps), c), rng);
  auto fwd = forward_rows(g, sample, Direction::kForward);
  auto bwd = forward_rows(g, sample, Direction::kBackward);

  ApproxResult r;
  r.estimate = Distance(g.num_edges() > 0 ? 1 : 0);
  r.whp = true;
  r.upper = upper_bound_rational(std::max(3.0, std::pow(static_cast<double>(n), eps)));
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t v = 0; v < n; ++v) {
      Distance d = std::min(fwd[i][v], bwd[i][v]);
      if (d > r.estimate) {
        r.estimate = d;
        r.witness_center = sample[i];
      }
    }
  }
  return r;
}

ApproxResult approx_min_diameter_dag(const Graph& g) {
  TopoDag dag(g);
  ApproxResult r;
  r.estimate = Distance(0);
  r.upper = {2, 1};
  std::vector<std::pair<std::size_t, std::size_t>> work;
  if (dag.size() > 1) work.push_back({0, dag.size()});
  std::vector<Distance> back, fwd;
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    std::size_t w = lo + (hi - lo) / 2;
    dag.to_target(lo, w, back);
    dag.from_source(w, hi - 1, fwd);
    for (Distance d : back) r.estimate = std::max(r.estimate, d);
    for (Distance d : fwd) r.estimate = std::max(r.estimate, d);
    if (w - lo > 1) work.push_back({lo, w});
    if (hi - (w + 1) > 1) work.push_back({w + 1, hi});
  }
  return r;
}

std::vector<bool> finite_min_eccentricities(const Graph& g) {
  Condensation c = condense_scc(g);
  std::size_t k = c.num_components;
  std::vector<std::vector<Vertex>> out(k), rev(k);
  for (Vertex u = 0; u < k; ++u) {
    for (const Arc& a : c.dag.out(u)) {
      out[u].push_back(a.head);
      // Reversed graph in reversed order: node k-1-i.
      rev[k - 1 - a.head].push_back(static_cast<Vertex>(k - 1 - u));
    }
  }
  auto reached = reached_by_all_before(out);
  auto reaches = reached_by_all_before(rev);
  std::vector<bool> finite(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    Vertex comp = c.component[v];
    finite[v] = reached[comp] && reaches[k - 1 - comp];
  }
  return finite;
}

std::optional<Vertex> approximate_center(const Graph& g, Distance radius) {
  TopoDag dag(g);
  std::size_t n = dag.size();
  if (n == 0) return std::nullopt;
  Distance wide = doubled(radius);
  auto anchors_count = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n)) - 1e-9));
  std::vector<std::size_t> anchors;
  if (anchors_count <= 1) {
    anchors.push_back(0);
  } else {
    for (std::size_t i = 0; i < anchors_count; ++i) {
      anchors.push_back(i * (n - 1) / (anchors_count - 1));
    }
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
  }

  struct Interval {
    std::size_t a, b;
  };
  std::vector<Interval> stack;
  std::vector<Distance> back, fwd;
  for (std::size_t p : anchors) {
    dag.to_target(0, p, back);
    dag.from_source(p, n - 1, fwd);
    bool all_within = true;
    std::size_t left = p, right = p;
    for (std::size_t v = 0; v < p; ++v) {
      if (back[v] > wide) {
        if (all_within) left = v;
        all_within = false;
      }
    }
    bool right_ok = true;
    for (std::size_t v = n - 1; v > p; --v) {
      if (fwd[v - p] > wide) {
        if (right_ok) right = v;
        right_ok = false;
      }
    }
    if (all_within && right_ok) return dag.vertex_at[p];
    // Merge with every stacked interval that overlaps or touches [left, right].
    while (!stack.empty() && left <= stack.back().b + 1) {
      left = std::min(left, stack.back().a);
      right = std::max(right, stack.back().b);
      stack.pop_back();
    }
    stack.push_back({left, right});
  }

  for (std::size_t j = 0; j + 1 < stack.size(); ++j) {
    std::size_t a = stack[j].a, d = stack[j + 1].b;
    for (std::size_t u = stack[j].b + 1; u < stack[j + 1].a; ++u) {
      dag.to_target(a, u, back);
      dag.from_source(u, d, fwd);
      bool ok = std::all_of(back.begin(), back.end(), [&](Distance x) { return x <= radius; }) &&
                std::all_of(fwd.begin(), fwd.end(), [&](Distance x) { return x <= radius; });
      if (ok) return dag.vertex_at[u];
    }
  }
  return std::nullopt;
}

ApproxResult approx_min_radius_dag(const Graph& g) {
  std::size_t n = g.num_vertices();
  if (n == 0) throw InputError("min-radius of an empty graph");
  ApproxResult r;
  r.upper = {3, 1};
  Distance::Value lo = 0, hi = static_cast<Distance::Value>(g.max_weight()) * n;
  auto found = approximate_center(g, Distance(hi));
  if (!found) {
    r.estimate = kInfinity;
    return r;
  }
  while (lo < hi) {
    Distance::Value mid = lo + (hi - lo) / 2;
    if (auto f = approximate_center(g, Distance(mid))) {
      hi = mid;
      found = f;
    } else {
      lo = mid + 1;
    }
  }
  r.witness_center = *found;
  r.estimate = eccentricity_of(g, Variant::kMin, *found);
  return r;
}

ApproxResult trivial_metric_estimate(const Graph& g, Variant v, Vertex probe) {
  if (v != Variant::kUndirected && v != Variant::kMax && v != Variant::kRoundtrip) {
    throw InputError("trivial estimate needs a metric variant (undirected, max, roundtrip)");
  }
  if (probe >= g.num_vertices()) throw InputError("probe vertex out of range");
  ApproxResult r;
  r.estimate = eccentricity_of(g, v, probe);
  r.witness_center = probe;
  r.upper = {2, 1};
  return r;
}

}  // namespace ecclab
