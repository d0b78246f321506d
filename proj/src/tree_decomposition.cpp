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

#include "ecclab/tree_decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ecclab/error.hpp"

namespace ecclab {
namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

[[noreturn]] void invalid(const std::string& what) {
  throw ValidationError("invalid tree decomposition: " + what);
}

}  // namespace

std::size_t TreeDecomposition::max_bag_size() const {
  std::size_t best = 0;
  for (const auto& b : bags) best = std::max(best, b.size());
  return best;
}

std::size_t TreeDecomposition::width() const {
  std::size_t m = max_bag_size();
  return m == 0 ? 0 : m - 1;
}

void validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  std::size_t n = g.num_vertices(), nb = td.bags.size();
  if (td.num_vertices != n) {
    invalid("decomposition is for " + std::to_string(td.num_vertices) + " vertices, graph has " +
            std::to_string(n));
  }
  std::vector<std::vector<std::size_t>> bags_of(n);
  std::vector<std::vector<Vertex>> sorted(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    sorted[b] = td.bags[b];
    std::sort(sorted[b].begin(), sorted[b].end());
    if (std::adjacent_find(sorted[b].begin(), sorted[b].end()) != sorted[b].end()) {
      invalid("bag " + std::to_string(b) + " repeats a vertex");
    }
    for (Vertex v : sorted[b]) {
      if (v >= n) invalid("bag " + std::to_string(b) + " holds out-of-range vertex");
      bags_of[v].push_back(b);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (bags_of[v].empty()) invalid("vertex coverage: vertex " + std::to_string(v) + " in no bag");
  }
  if (nb > 0 && td.tree_edges.size() != nb - 1) invalid("tree: bag graph is not a tree");
  UnionFind uf(nb);
  for (auto [x, y] : td.tree_edges) {
    if (x >= nb || y >= nb) invalid("tree: edge references a missing bag");
    if (!uf.unite(x, y)) invalid("tree: bag graph has a cycle");
  }
  for (const Edge& e : g.edges()) {
    const auto& a = bags_of[e.from];
    const auto& b = bags_of[e.to];
    std::vector<std::size_t> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty()) {
      invalid("edge coverage: edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
              ") in no bag");
    }
  }
  std::vector<std::size_t> shared_edges(n, 0);
  for (auto [x, y] : td.tree_edges) {
    for (Vertex v : sorted[x]) {
      if (std::binary_search(sorted[y].begin(), sorted[y].end(), v)) ++shared_edges[v];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (shared_edges[v] + 1 != bags_of[v].size()) {
      invalid("connectivity: bags of vertex " + std::to_string(v) + " are not connected");
    }
  }
}

std::string write_td(const TreeDecomposition& td) {
  std::ostringstream out;
  out << "s td " << td.bags.size() << ' ' << td.max_bag_size() << ' ' << td.num_vertices << '\n';
  for (std::size_t b = 0; b < td.bags.size(); ++b) {
    out << "b " << b + 1;
    for (Vertex v : td.bags[b]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [x, y] : td.tree_edges) out << x + 1 << ' ' << y + 1 << '\n';
  return out.str();
}

TreeDecomposition read_td(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  TreeDecomposition td;
  bool have_header = false;
  std::size_t declared_bags = 0, declared_size = 0, lineno = 0;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto fail = [&](const std::string& what) {
      throw InputError("td line " + std::to_string(lineno) + ": " + what);
    };
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c" || tok[0] == '#') continue;
    if (tok == "s") {
      std::string kind;
      if (have_header || !(ls >> kind >> declared_bags >> declared_size >> td.num_vertices) ||
          kind != "td") {
        fail("expected a single 's td <bags> <width+1> <n>' header");
      }
      have_header = true;
      td.bags.assign(declared_bags, {});
      seen.assign(declared_bags, false);
      continue;
    }
    if (!have_header) fail("missing header");
    if (tok == "b") {
      long long id = 0, v = 0;
      if (!(ls >> id) || id < 1 || static_cast<std::size_t>(id) > declared_bags) fail("bad bag id");
      if (seen[id - 1]) fail("bag listed twice");
      seen[id - 1] = true;
      while (ls >> v) {
        if (v < 1 || static_cast<std::size_t>(v) > td.num_vertices) fail("bad vertex");
        td.bags[id - 1].push_back(static_cast<Vertex>(v - 1));
      }
      if (!ls.eof()) fail("bad token in bag");
      continue;
    }
    long long x = 0, y = 0;
    std::istringstream es(line);
    if (!(es >> x >> y) || x < 1 || y < 1) fail("expected tree edge '<b1> <b2>'");
    td.tree_edges.push_back({static_cast<std::size_t>(x - 1), static_cast<std::size_t>(y - 1)});
  }
  if (!have_header) throw InputError("td file has no header");
  if (td.max_bag_size() != declared_size) throw InputError("td header width does not match bags");
  return td;
}

TreeDecomposition greedy_min_degree_decomposition(const Graph& g) {
  std::size_t n = g.num_vertices();
  std::vector<std::set<Vertex>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.from].insert(e.to);
    adj[e.to].insert(e.from);
  }
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) queue.insert({adj[v].size(), v});
  std::vector<std::size_t> pos(n);
  std::vector<std::vector<Vertex>> later(n);
  TreeDecomposition td;
  td.num_vertices = n;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex v = queue.begin()->second;
    queue.erase(queue.begin());
    pos[v] = step;
    later[v].assign(adj[v].begin(), adj[v].end());
    std::vector<Vertex> bag{v};
    bag.insert(bag.end(), adj[v].begin(), adj[v].end());
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(std::move(bag));
    for (Vertex u : adj[v]) {
      queue.erase({adj[u].size(), u});
      adj[u].erase(v);
    }
    for (Vertex a : later[v]) {
      for (Vertex b : later[v]) {
        if (a < b && adj[a].insert(b).second) adj[b].insert(a);
      }
    }
    for (Vertex u : later[v]) queue.insert({adj[u].size(), u});
    adj[v].clear();
  }
  // Bag i belongs to the i-th eliminated vertex; it hangs below the bag of
  // its earliest-eliminated later neighbor. Roots are chained.
  std::vector<Vertex> by_step(n);
  for (Vertex v = 0; v < n; ++v) by_step[pos[v]] = v;
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = by_step[i];
    if (later[v].empty()) {
      roots.push_back(i);
      continue;
    }
    std::size_t parent = n;
    for (Vertex u : later[v]) parent = std::min(parent, pos[u]);
    td.tree_edges.push_back({i, parent});
  }
  for (std::size_t i = 1; i < roots.size(); ++i) td.tree_edges.push_back({roots[i - 1], roots[i]});
  // Bags were pushed in elimination order, matching index i above.
  return td;
}

}  // namespace ecclab
