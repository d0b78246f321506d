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

#include "ecclab/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>

#include "ecclab/error.hpp"
#include "ecclab/three_layer.hpp"
#include "ecclab/traversal.hpp"

namespace ecclab {
namespace {

constexpr std::size_t kFullMaskLimit = 12;

// Contracts every tree edge whose endpoint bags are nested, then drops the
// absorbed bags. Afterwards adjacent bags share at most width vertices.
TreeDecomposition normalize(const TreeDecomposition& td) {
  std::size_t nb = td.bags.size();
  std::vector<std::vector<Vertex>> bags = td.bags;
  for (auto& b : bags) std::sort(b.begin(), b.end());
  std::vector<std::set<std::size_t>> adj(nb);
  for (auto [x, y] : td.tree_edges) {
    adj[x].insert(y);
    adj[y].insert(x);
  }
  std::vector<bool> alive(nb, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < nb; ++x) {
      if (!alive[x]) continue;
      for (std::size_t y : adj[x]) {
        if (!std::includes(bags[y].begin(), bags[y].end(), bags[x].begin(), bags[x].end())) {
          continue;
        }
        for (std::size_t z : adj[x]) {
          if (z == y) continue;
          adj[z].erase(x);
          adj[z].insert(y);
          adj[y].insert(z);
        }
        adj[y].erase(x);
        adj[x].clear();
        alive[x] = false;
        changed = true;
        break;
      }
    }
  }
  std::vector<std::size_t> index(nb, 0);
  TreeDecomposition out;
  out.num_vertices = td.num_vertices;
  for (std::size_t x = 0; x < nb; ++x) {
    if (!alive[x]) continue;
    index[x] = out.bags.size();
    out.bags.push_back(bags[x]);
  }
  for (std::size_t x = 0; x < nb; ++x) {
    for (std::size_t y : adj[x]) {
      if (alive[x] && x < y) out.tree_edges.push_back({index[x], index[y]});
    }
  }
  return out;
}

struct SplitPlan {
  std::size_t bag = 0;
  std::vector<char> in_side;             // per vertex
  std::vector<std::size_t> side_bags;    // includes bag
  std::vector<std::size_t> other_bags;   // includes bag
};

// Requires a normalized decomposition with at least two bags.
std::optional<SplitPlan> plan_split(const TreeDecomposition& td) {
  std::size_t n = td.num_vertices, nb = td.bags.size();
  std::size_t k = td.width();
  std::vector<std::vector<std::size_t>> adj(nb);
  for (auto [x, y] : td.tree_edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  // Root at bag 0.
  std::vector<std::size_t> order{0}, parent(nb, nb), depth(nb, 0);
  std::vector<bool> seen(nb, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t y : adj[order[i]]) {
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = order[i];
        depth[y] = depth[order[i]] + 1;
        order.push_back(y);
      }
    }
  }
  std::vector<std::size_t> top(n, nb);
  for (std::size_t b = 0; b < nb; ++b) {
    for (Vertex v : td.bags[b]) {
      if (top[v] == nb || depth[b] < depth[top[v]]) top[v] = b;
    }
  }
  std::vector<std::size_t> down(nb, 0);
  for (Vertex v = 0; v < n; ++v) ++down[top[v]];
  for (std::size_t i = nb; i-- > 1;) down[parent[order[i]]] += down[order[i]];

  struct Best {
    std::size_t cost, bag;
    std::uint64_t mask;
  };
  std::optional<Best> best;
  for (std::size_t b = 0; b < nb; ++b) {
    const auto& bag = td.bags[b];
    if (bag.size() > 63) continue;
    std::vector<std::pair<std::uint64_t, std::size_t>> branches;
    for (std::size_t x : adj[b]) {
      std::uint64_t sep = 0;
      for (std::size_t i = 0; i < bag.size(); ++i) {
        if (std::binary_search(td.bags[x].begin(), td.bags[x].end(), bag[i])) sep |= 1ull << i;
      }
      std::size_t region = x == parent[b] ? n - down[b] - std::popcount(sep) : down[x];
      branches.push_back({sep, region});
    }
    std::vector<std::uint64_t> masks;
    if (bag.size() <= kFullMaskLimit) {
      for (std::uint64_t m = 0; m < (1ull << bag.size()); ++m) masks.push_back(m);
    } else {
      for (const auto& br : branches) masks.push_back(br.first);
    }
    for (std::uint64_t mask : masks) {
      std::size_t ysize = std::popcount(mask);
      if (ysize > k) continue;
      std::size_t region = 0;
      for (const auto& [sep, r] : branches) {
        if ((sep & ~mask) == 0) region += r;
      }
      std::size_t side = ysize + region;
      if (region == 0 || side >= n) continue;
      std::size_t cost = std::max(side, n - side + ysize);
      if (!best || cost < best->cost) best = Best{cost, b, mask};
    }
  }
  if (!best) return std::nullopt;

  SplitPlan plan;
  plan.bag = best->bag;
  plan.in_side.assign(n, 0);
  const auto& bag = td.bags[plan.bag];
  std::vector<char> in_bag(n, 0);
  for (std::size_t i = 0; i < bag.size(); ++i) {
    in_bag[bag[i]] = 1;
    if (best->mask >> i & 1) plan.in_side[bag[i]] = 1;
  }
  plan.side_bags.push_back(plan.bag);
  plan.other_bags.push_back(plan.bag);
  for (std::size_t x : adj[plan.bag]) {
    bool chosen = std::all_of(td.bags[x].begin(), td.bags[x].end(), [&](Vertex v) {
      return !in_bag[v] || plan.in_side[v];
    });
    // Collect the branch component behind x.
    std::vector<std::size_t> comp{x};
    std::vector<bool> visited(nb, false);
    visited[plan.bag] = visited[x] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t y : adj[comp[i]]) {
        if (!visited[y]) {
          visited[y] = true;
          comp.push_back(y);
        }
      }
    }
    auto& target = chosen ? plan.side_bags : plan.other_bags;
    target.insert(target.end(), comp.begin(), comp.end());
    if (chosen) {
      for (std::size_t c : comp) {
        for (Vertex v : td.bags[c]) {
          if (!in_bag[v]) plan.in_side[v] = 1;
        }
      }
    }
  }
  return plan;
}

TreeDecomposition restrict_decomposition(const TreeDecomposition& td,
                                         const std::vector<std::size_t>& bag_ids,
                                         const std::vector<Vertex>& vertices) {
  std::vector<Vertex> local(td.num_vertices, ~Vertex{0});
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Vertex>(i);
  std::vector<std::size_t> index(td.bags.size(), td.bags.size());
  TreeDecomposition out;
  out.num_vertices = vertices.size();
  for (std::size_t b : bag_ids) {
    index[b] = out.bags.size();
    std::vector<Vertex> bag;
    for (Vertex v : td.bags[b]) {
      if (local[v] != ~Vertex{0}) bag.push_back(local[v]);
    }
    out.bags.push_back(std::move(bag));
  }
  for (auto [x, y] : td.tree_edges) {
    if (index[x] < td.bags.size() && index[y] < td.bags.size()) {
      out.tree_edges.push_back({index[x], index[y]});
    }
  }
  return out;
}

std::vector<Vertex> boundary(const Graph& g, const std::vector<char>& in_side) {
  std::vector<Vertex> portals;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!in_side[v]) continue;
    bool leaves = false;
    for (const Arc& a : g.out(v)) leaves = leaves || !in_side[a.head];
    for (const Arc& a : g.in(v)) leaves = leaves || !in_side[a.head];
    if (leaves) portals.push_back(v);
  }
  return portals;
}

Weight to_weight(Distance d) {
  if (d.value() > UINT32_MAX) throw CapacityError("portal distance exceeds the weight range");
  return static_cast<Weight>(d.value());
}

Graph augment(const Graph& g, const std::vector<Vertex>& vertices,
              const std::vector<Vertex>& portals,
              const std::vector<std::vector<Distance>>& portal_fwd) {
  std::vector<Vertex> local(g.num_vertices(), ~Vertex{0});
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Vertex>(i);
  Graph inner = induced_subgraph(g, vertices);
  std::vector<Edge> edges = inner.edges();
  for (std::size_t i = 0; i < portals.size(); ++i) {
    for (std::size_t j = 0; j < portals.size(); ++j) {
      if (i == j || (g.is_undirected() && j < i)) continue;
      Distance d = portal_fwd[i][portals[j]];
      if (d.is_finite()) edges.push_back({local[portals[i]], local[portals[j]], to_weight(d)});
    }
  }
  return Graph(vertices.size(), std::move(edges), g.is_undirected());
}

class Solver {
 public:
  explicit Solver(Variant v) : variant_(v) {}

  std::vector<Distance> solve(const Graph& h, const TreeDecomposition& td) {
    std::size_t n = h.num_vertices();
    std::size_t w = td.width();
    if (n <= std::max<std::size_t>(w * w * w, 16)) return brute(h);
    TreeDecomposition norm = normalize(td);
    if (norm.bags.size() < 2) return brute(h);
    auto plan = plan_split(norm);
    if (!plan) return brute(h);

    std::vector<Vertex> side, rest, portals = boundary(h, plan->in_side);
    for (Vertex v = 0; v < n; ++v) (plan->in_side[v] ? side : rest).push_back(v);
    if (portals.size() > w) {
      throw Error("portal bound violated");
    }
    std::vector<char> is_portal(n, 0);
    for (Vertex p : portals) is_portal[p] = 1;

    std::vector<std::vector<Distance>> fwd(portals.size()), bwd(portals.size());
    for (std::size_t i = 0; i < portals.size(); ++i) {
      fwd[i] = shortest_paths(h, portals[i], Direction::kForward).dist;
      bwd[i] = h.is_undirected() ? fwd[i]
                                 : shortest_paths(h, portals[i], Direction::kBackward).dist;
    }

    std::vector<Vertex> rest_plus;
    for (Vertex v = 0; v < n; ++v) {
      if (!plan->in_side[v] || is_portal[v]) rest_plus.push_back(v);
    }
    auto side_ecc = solve(augment(h, side, portals, fwd),
                          restrict_decomposition(norm, plan->side_bags, side));
    auto rest_ecc = solve(augment(h, rest_plus, portals, fwd),
                          restrict_decomposition(norm, plan->other_bags, rest_plus));

    std::vector<Distance> ecc(n, Distance(0));
    for (std::size_t i = 0; i < side.size(); ++i) ecc[side[i]] = side_ecc[i];
    for (std::size_t i = 0; i < rest_plus.size(); ++i) {
      if (!is_portal[rest_plus[i]]) ecc[rest_plus[i]] = rest_ecc[i];
    }
    std::vector<Vertex> inner;
    for (Vertex v : side) {
      if (!is_portal[v]) inner.push_back(v);
    }
    auto inner_cross = cross(inner, rest, fwd, bwd);
    for (std::size_t i = 0; i < inner.size(); ++i) {
      ecc[inner[i]] = std::max(ecc[inner[i]], inner_cross[i]);
    }
    auto rest_cross = cross(rest, inner, fwd, bwd);
    for (std::size_t i = 0; i < rest.size(); ++i) {
      ecc[rest[i]] = std::max(ecc[rest[i]], rest_cross[i]);
    }
    for (std::size_t i = 0; i < portals.size(); ++i) {
      Distance e(0);
      for (Vertex v = 0; v < n; ++v) {
        if (v != portals[i]) e = std::max(e, pair_distance(variant_, fwd[i][v], bwd[i][v]));
      }
      ecc[portals[i]] = e;
    }
    return ecc;
  }

 private:
  std::vector<Distance> brute(const Graph& h) const {
    std::vector<Distance> ecc(h.num_vertices());
    for (Vertex v = 0; v < h.num_vertices(); ++v) ecc[v] = eccentricity_of(h, variant_, v);
    return ecc;
  }

  // For each x in xs: max over y in ys of the pair distance from x to y,
  // where every x-y path passes through a portal.
  std::vector<Distance> cross(const std::vector<Vertex>& xs, const std::vector<Vertex>& ys,
                              const std::vector<std::vector<Distance>>& fwd,
                              const std::vector<std::vector<Distance>>& bwd) const {
    std::size_t np = fwd.size();
    auto make = [&](std::size_t mids, auto&& first, auto&& second) {
      ThreeLayerInstance inst(xs.size(), mids, ys.size());
      for (std::size_t m = 0; m < mids; ++m) {
        for (std::size_t a = 0; a < xs.size(); ++a) inst.d_ab(a, m) = first(m, xs[a]);
        for (std::size_t c = 0; c < ys.size(); ++c) inst.d_bc(m, c) = second(m, ys[c]);
      }
      std::vector<Distance> out;
      for (const Farthest& f : three_layer_farthest(inst)) out.push_back(f.dist);
      return out;
    };
    // d(x -> p) + d(p -> y), and the reverse route d(y -> p) + d(p -> x).
    auto to_portal = [&](std::size_t m, Vertex x) { return bwd[m][x]; };
    auto from_portal = [&](std::size_t m, Vertex y) { return fwd[m][y]; };
    auto back_first = [&](std::size_t m, Vertex x) { return fwd[m][x]; };
    auto back_second = [&](std::size_t m, Vertex y) { return bwd[m][y]; };
    switch (variant_) {
      case Variant::kUndirected:
      case Variant::kSource:
        return make(np, to_portal, from_portal);
      case Variant::kMax: {
        auto there = make(np, to_portal, from_portal);
        auto back = make(np, back_first, back_second);
        for (std::size_t i = 0; i < there.size(); ++i) there[i] = std::max(there[i], back[i]);
        return there;
      }
      case Variant::kMin:
        return make(
            2 * np,
            [&](std::size_t m, Vertex x) { return m < np ? bwd[m][x] : fwd[m - np][x]; },
            [&](std::size_t m, Vertex y) { return m < np ? fwd[m][y] : bwd[m - np][y]; });
      case Variant::kRoundtrip:
        // Ordered pair (p, q): leave through p, return through q.
        return make(
            np * np,
            [&](std::size_t m, Vertex x) { return bwd[m / np][x] + fwd[m % np][x]; },
            [&](std::size_t m, Vertex y) { return fwd[m / np][y] + bwd[m % np][y]; });
    }
    return {};
  }

  Variant variant_;
};

}  // namespace

PortalSplit find_portal_split(const Graph& g, const TreeDecomposition& td) {
  validate_decomposition(g, td);
  if (g.num_vertices() <= td.width() + 1) {
    throw InputError("portal split needs more than width+1 vertices");
  }
  TreeDecomposition norm = normalize(td);
  auto plan = plan_split(norm);
  if (!plan) throw Error("no portal split found");
  PortalSplit split;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    (plan->in_side[v] ? split.side : split.complement).push_back(v);
  }
  split.portals = boundary(g, plan->in_side);
  return split;
}

Graph augment_with_portals(const Graph& g, const std::vector<Vertex>& vertices,
                           const std::vector<Vertex>& portals) {
  std::vector<std::vector<Distance>> fwd;
  for (Vertex p : portals) fwd.push_back(shortest_paths(g, p).dist);
  return augment(g, vertices, portals, fwd);
}

EccentricityReport tw_eccentricities(const Graph& g, const TreeDecomposition& td, Variant v) {
  check_variant(g, v);
  validate_decomposition(g, td);
  if (g.num_vertices() == 0) throw InputError("eccentricities of an empty graph");
  EccentricityReport r;
  r.variant = v;
  r.ecc = Solver(v).solve(g, td);
  finish_report(r, [&](Vertex u) { return pair_distances_from(g, v, u); });
  return r;
}

}  // namespace ecclab
