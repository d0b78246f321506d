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

#include "ecclab/hash_reduction.hpp"

#include <cmath>
#include <random>

#include "ecclab/error.hpp"
#include "ecclab/set_system.hpp"
#include "ecclab/traversal.hpp"

namespace ecclab {

std::string to_string(DecisionTarget t) {
  return t == DecisionTarget::kDiameter ? "diameter" : "radius";
}

DecisionTarget parse_decision_target(const std::string& s) {
  if (s == "diameter") return DecisionTarget::kDiameter;
  if (s == "radius") return DecisionTarget::kRadius;
  throw InputError("unknown target: " + s);
}

namespace {

std::vector<BitSet> hashed_balls(const Graph& g, const std::vector<Vertex>& vertices,
                                 std::size_t width, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, width - 1);
  std::vector<std::size_t> h(g.num_vertices());
  for (auto& x : h) x = pick(rng);
  std::vector<BitSet> out;
  out.reserve(vertices.size());
  for (Vertex v : vertices) {
    BitSet bits(width);
    bits.set(h[v]);
    for (const Arc& a : g.out(v)) bits.set(h[a.head]);
    out.push_back(std::move(bits));
  }
  return out;
}

}  // namespace

HashReductionResult reduce_decision23(const Graph& g, DecisionTarget target,
                                      const HashReductionOptions& options, Rng& rng) {
  if (!g.is_undirected() || !g.has_unit_weights()) {
    throw InputError("the 2-vs-3 reduction needs an undirected unweighted graph");
  }
  std::size_t n = g.num_vertices();
  if (n == 0) throw InputError("empty graph");
  HashReductionResult result;
  result.delta = options.delta ? options.delta
                               : static_cast<std::size_t>(std::ceil(std::sqrt(double(n))));
  std::size_t width = 10 * result.delta * result.delta;

  std::vector<Vertex> low;
  std::vector<char> covered(n, 1);  // radius: every high vertex within 2
  for (Vertex v = 0; v < n; ++v) {
    if (g.out(v).size() < result.delta) {
      low.push_back(v);
      continue;
    }
    ++result.high_degree;
    auto dist = shortest_paths(g, v).dist;
    Distance ecc = max_excluding(dist, v);
    if (target == DecisionTarget::kDiameter && ecc > Distance(2)) {
      result.value = 3;
      result.decided_by_traversal = true;
      return result;
    }
    if (target == DecisionTarget::kRadius) {
      if (ecc <= Distance(2)) {
        result.value = 2;
        result.decided_by_traversal = true;
        return result;
      }
      for (Vertex u = 0; u < n; ++u) covered[u] = covered[u] && dist[u] <= Distance(2);
    }
  }

  if (target == DecisionTarget::kDiameter) {
    for (std::size_t r = 0; r < options.rounds; ++r) {
      ++result.rounds_run;
      auto balls = hashed_balls(g, low, width, rng);
      if (find_disjoint_pair(balls, balls)) {
        result.value = 3;
        return result;
      }
    }
    result.value = 2;
    return result;
  }

  std::vector<std::size_t> candidates;  // indices into low
  for (std::size_t i = 0; i < low.size(); ++i) {
    if (covered[low[i]]) candidates.push_back(i);
  }
  for (std::size_t r = 0; r < options.rounds && !candidates.empty(); ++r) {
    ++result.rounds_run;
    auto balls = hashed_balls(g, low, width, rng);
    std::vector<BitSet> cand_balls;
    for (std::size_t i : candidates) cand_balls.push_back(balls[i]);
    std::vector<std::size_t> kept;
    for (std::size_t k : hitting_indices(cand_balls, balls)) kept.push_back(candidates[k]);
    candidates = std::move(kept);
  }
  result.value = candidates.empty() ? 3 : 2;
  return result;
}

}  // namespace ecclab
