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

#include <algorithm>
#include <numeric>

#include "ecclab/error.hpp"
#include "ecclab/tree_decomposition.hpp"

namespace ecclab {

PartialKTree generate_partial_ktree(std::size_t n, std::size_t k, double keep_prob, Rng& rng) {
  if (n <= k) throw InputError("partial k-tree needs n > k");
  struct Clique {
    std::vector<Vertex> members;
    std::size_t bag;
  };
  TreeDecomposition td;
  td.num_vertices = n;
  std::vector<Edge> edges;
  std::vector<Vertex> seed(k + 1);
  std::iota(seed.begin(), seed.end(), Vertex{0});
  td.bags.push_back(seed);
  for (Vertex a = 0; a <= k; ++a) {
    for (Vertex b = a + 1; b <= k; ++b) edges.push_back({a, b, 1});
  }
  std::vector<Clique> cliques;
  for (std::size_t skip = 0; skip <= k; ++skip) {
    Clique c{{}, 0};
    for (Vertex v : seed) {
      if (v != skip) c.members.push_back(v);
    }
    cliques.push_back(std::move(c));
  }
  std::bernoulli_distribution keep(keep_prob);
  for (std::size_t v = k + 1; v < n; ++v) {
    std::size_t pick = std::uniform_int_distribution<std::size_t>(0, cliques.size() - 1)(rng);
    Clique base = cliques[pick];
    std::size_t bag = td.bags.size();
    std::vector<Vertex> members = base.members;
    members.push_back(static_cast<Vertex>(v));
    td.bags.push_back(members);
    td.tree_edges.push_back({base.bag, bag});
    for (Vertex u : base.members) {
      if (keep(rng)) edges.push_back({u, static_cast<Vertex>(v), 1});
    }
    for (std::size_t i = 0; i < base.members.size(); ++i) {
      Clique c{base.members, bag};
      c.members[i] = static_cast<Vertex>(v);
      cliques.push_back(std::move(c));
    }
  }
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  for (Edge& e : edges) e = {perm[e.from], perm[e.to], 1};
  for (auto& bag : td.bags) {
    for (Vertex& v : bag) v = perm[v];
    std::sort(bag.begin(), bag.end());
  }
  return {Graph::undirected(n, std::move(edges)), std::move(td)};
}

}  // namespace ecclab
