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

#include "ecclab/oracle.hpp"

#include <algorithm>

#include "ecclab/error.hpp"
#include "ecclab/parallel.hpp"
#include "ecclab/traversal.hpp"

namespace ecclab {
namespace {

void check_capacity(const Graph& g, const OracleConfig& config) {
  if (g.num_vertices() > config.cap) {
    throw CapacityError("oracle capacity exceeded: n=" + std::to_string(g.num_vertices()) +
                        " > cap=" + std::to_string(config.cap));
  }
}

bool needs_backward(Variant v) {
  return v == Variant::kMax || v == Variant::kMin || v == Variant::kRoundtrip;
}

}  // namespace

std::string to_string(Variant v) {
  switch (v) {
    case Variant::kUndirected: return "undirected";
    case Variant::kSource: return "source";
    case Variant::kMax: return "max";
    case Variant::kMin: return "min";
    case Variant::kRoundtrip: return "roundtrip";
  }
  return "?";
}

Variant parse_variant(const std::string& name) {
  for (Variant v : kAllVariants) {
    if (to_string(v) == name) return v;
  }
  throw InputError("unknown variant '" + name + "'");
}

void check_variant(const Graph& g, Variant v) {
  if (v == Variant::kUndirected && !g.is_undirected()) {
    throw InputError("undirected variant requires an undirected graph");
  }
}

Distance pair_distance(Variant v, Distance to, Distance from) {
  switch (v) {
    case Variant::kUndirected:
    case Variant::kSource: return to;
    case Variant::kMax: return std::max(to, from);
    case Variant::kMin: return std::min(to, from);
    case Variant::kRoundtrip: return to + from;
  }
  return to;
}

DistanceMatrix all_pairs(const Graph& g, const OracleConfig& config) {
  check_capacity(g, config);
  std::size_t n = g.num_vertices();
  DistanceMatrix m(n);
  parallel_for(n, [&](std::size_t u) {
    auto row = shortest_paths(g, static_cast<Vertex>(u)).dist;
    for (std::size_t v = 0; v < n; ++v) m.at(u, v) = row[v];
  });
  return m;
}

std::vector<Distance> pair_distances_from(const Graph& g, Variant v, Vertex c) {
  check_variant(g, v);
  auto fwd = shortest_paths(g, c, Direction::kForward).dist;
  if (!needs_backward(v)) return fwd;
  auto bwd = shortest_paths(g, c, Direction::kBackward).dist;
  for (std::size_t u = 0; u < fwd.size(); ++u) fwd[u] = pair_distance(v, fwd[u], bwd[u]);
  return fwd;
}

Distance eccentricity_of(const Graph& g, Variant v, Vertex c) {
  return max_excluding(pair_distances_from(g, v, c), c);
}

EccentricityReport exact_eccentricities(const Graph& g, Variant v, const OracleConfig& config) {
  check_variant(g, v);
  check_capacity(g, config);
  std::size_t n = g.num_vertices();
  if (n == 0) throw InputError("eccentricities of an empty graph");
  EccentricityReport r;
  r.variant = v;
  r.ecc.assign(n, Distance(0));
  parallel_for(n, [&](std::size_t c) {
    r.ecc[c] = eccentricity_of(g, v, static_cast<Vertex>(c));
  });
  finish_report(r, [&](Vertex u) { return pair_distances_from(g, v, u); });
  return r;
}

MedianResult exact_median(const Graph& g, const OracleConfig& config) {
  check_capacity(g, config);
  std::size_t n = g.num_vertices();
  if (n == 0) throw InputError("median of an empty graph");
  std::vector<Distance> sums(n);
  parallel_for(n, [&](std::size_t c) {
    Distance s(0);
    for (Distance d : shortest_paths(g, static_cast<Vertex>(c)).dist) s += d;
    sums[c] = s;
  });
  MedianResult best{0, sums[0]};
  for (std::size_t c = 1; c < n; ++c) {
    if (sums[c] < best.sum) best = {static_cast<Vertex>(c), sums[c]};
  }
  return best;
}

}  // namespace ecclab
