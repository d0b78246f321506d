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

#ifndef ECCLAB_APPROX_HPP_
#define ECCLAB_APPROX_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecclab/distance.hpp"
#include "ecclab/graph.hpp"
#include "ecclab/oracle.hpp"
#include "ecclab/rng.hpp"

namespace ecclab {

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Radius problems: R <= estimate <= upper * R.
// Diameter problems: D / upper <= estimate <= D.
struct ApproxResult {
  Distance estimate;
  std::optional<Vertex> witness_center;
  Rational lower{1, 1};
  Rational upper{1, 1};
  bool whp = false;
};

// Hitting-set size min(n, ceil(c * base * ln n)), at least 1.
std::size_t hitting_set_size(std::size_t n, double base, double c);

ApproxResult approx_source_radius(const Graph& g, Rng& rng, double c = 2.0);

// Unweighted graphs only. epsilon in (0, 1].
ApproxResult approx_min_diameter(const Graph& g, Rational epsilon, Rng& rng, double c = 2.0);

// Throws CyclicError.
ApproxResult approx_min_diameter_dag(const Graph& g);

// true iff max over u of min{d(v->u), d(u->v)} is finite.
std::vector<bool> finite_min_eccentricities(const Graph& g);

// Found vertex has min-eccentricity <= 3R; nullopt means every vertex has
// min-eccentricity > R. Any vertex numbering is accepted (the DAG is put in
// topological order internally). Throws CyclicError.
std::optional<Vertex> approximate_center(const Graph& g, Distance radius);

// Binary search over integer R in [0, M*n]; the estimate is the exact
// min-eccentricity of the returned center. Throws CyclicError.
ApproxResult approx_min_radius_dag(const Graph& g);

// Eccentricity of probe under Undirected, Max or Roundtrip.
ApproxResult trivial_metric_estimate(const Graph& g, Variant v, Vertex probe);

}  // namespace ecclab

#endif  // ECCLAB_APPROX_HPP_
