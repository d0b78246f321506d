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

#ifndef ECCLAB_ORACLE_HPP_
#define ECCLAB_ORACLE_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ecclab/distance.hpp"
#include "ecclab/graph.hpp"

namespace ecclab {

enum class Variant { kUndirected, kSource, kMax, kMin, kRoundtrip };

inline constexpr Variant kAllVariants[] = {Variant::kUndirected, Variant::kSource, Variant::kMax,
                                           Variant::kMin, Variant::kRoundtrip};

std::string to_string(Variant v);
// Accepts the lowercase names printed by to_string. Throws InputError.
Variant parse_variant(const std::string& name);

// Throws InputError for Undirected on a directed graph.
void check_variant(const Graph& g, Variant v);

// Pair distance from c to v given d(c->v) and d(v->c).
Distance pair_distance(Variant v, Distance to, Distance from);

struct OracleConfig {
  // Largest vertex count accepted by the quadratic routines.
  std::size_t cap = 5000;
};

// Row-major n x n matrix of d(u -> v).
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, kInfinity) {}
  std::size_t size() const { return n_; }
  Distance& at(std::size_t u, std::size_t v) { return data_[u * n_ + v]; }
  Distance at(std::size_t u, std::size_t v) const { return data_[u * n_ + v]; }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> data_;
};

// n single-source runs. Throws CapacityError above the cap.
DistanceMatrix all_pairs(const Graph& g, const OracleConfig& config = {});

struct EccentricityReport {
  Variant variant = Variant::kUndirected;
  std::vector<Distance> ecc;
  Distance radius;
  Distance diameter;
  Vertex center = 0;
  // (u, v) with pair_distance(u, v) = diameter.
  std::pair<Vertex, Vertex> witness{0, 0};

  friend bool operator==(const EccentricityReport&, const EccentricityReport&) = default;
};

// Fills radius, diameter, center and witness from ecc; pair_row(u) must
// return the variant's pair distances from u.
template <typename PairRow>
void finish_report(EccentricityReport& r, PairRow&& pair_row);

// ecc[c] = max over v != c of the variant's pair distance. Needs n >= 1.
EccentricityReport exact_eccentricities(const Graph& g, Variant v,
                                        const OracleConfig& config = {});

// Pair distances from c to every vertex (entry c is 0).
std::vector<Distance> pair_distances_from(const Graph& g, Variant v, Vertex c);
Distance eccentricity_of(const Graph& g, Variant v, Vertex c);

struct MedianResult {
  Vertex vertex = 0;
  Distance sum;
};

// min over c of sum over v != c of d(c -> v); smallest id on ties.
MedianResult exact_median(const Graph& g, const OracleConfig& config = {});

template <typename PairRow>
void finish_report(EccentricityReport& r, PairRow&& pair_row) {
  std::size_t n = r.ecc.size();
  r.radius = kInfinity;
  r.diameter = Distance(0);
  r.center = 0;
  Vertex far = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (r.ecc[c] < r.radius) {
      r.radius = r.ecc[c];
      r.center = static_cast<Vertex>(c);
    }
    if (r.ecc[c] > r.diameter) {
      r.diameter = r.ecc[c];
      far = static_cast<Vertex>(c);
    }
  }
  r.witness = {far, far};
  if (n < 2) return;
  std::vector<Distance> row = pair_row(far);
  for (std::size_t v = 0; v < n; ++v) {
    if (v != far && row[v] == r.diameter) {
      r.witness.second = static_cast<Vertex>(v);
      break;
    }
  }
}

}  // namespace ecclab

#endif  // ECCLAB_ORACLE_HPP_
