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

#ifndef ECCLAB_GADGETS_HPP_
#define ECCLAB_GADGETS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ecclab/distance.hpp"
#include "ecclab/graph.hpp"
#include "ecclab/oracle.hpp"
#include "ecclab/set_system.hpp"
#include "ecclab/tree_decomposition.hpp"

namespace ecclab {

enum class GadgetQuantity { kRadius, kDiameter, kEccentricities, kMedian };

std::string to_string(GadgetQuantity q);
GadgetQuantity parse_gadget_quantity(const std::string& s);

struct VertexCheck {
  Vertex vertex = 0;
  Distance ecc;
  bool operator==(const VertexCheck&) const = default;
};

// A reduction graph together with the value it promises. When `exact` holds
// the measured quantity equals yes_value, otherwise it is at least no_bound.
// For hitting-set gadgets exact == answer; for orthogonal-vector gadgets
// exact == !answer. Eccentricity gadgets promise each entry of
// vertex_checks exactly instead.
struct GadgetOutput {
  std::string kind;
  Graph graph;
  Variant variant = Variant::kUndirected;
  GadgetQuantity quantity = GadgetQuantity::kRadius;
  Distance yes_value;
  Distance no_bound;
  bool answer = false;
  bool exact = false;
  bool is_dag = false;
  std::vector<std::optional<Vertex>> witness_map;  // index in the A list -> vertex
  std::vector<VertexCheck> vertex_checks;
  std::optional<TreeDecomposition> pathwidth_witness;
};

// Undirected tripartite graph: A first, then the universe U, then B; a - u
// when u is in a, u - b when u is in b. Built from the reduced instance.
struct HseGraph {
  ReducedHittingSet reduced;
  Graph graph;
};
HseGraph build_hse_graph(const SetSystem& hse);

// Directed: A first, then one vertex per coordinate, then B; a -> c when
// a[c] = 1 and c -> b when b[c] = 1.
Graph build_ov_graph(const SetSystem& ov);

std::size_t default_stretch(const SetSystem& s);

GadgetOutput gadget_radius_23(const SetSystem& hse);
GadgetOutput gadget_source_radius(const SetSystem& hse, std::size_t t);
GadgetOutput gadget_max_radius(const SetSystem& hse, std::size_t t);
// Long arcs of the 4-cycles are single arcs of weight 3.
GadgetOutput gadget_roundtrip_radius(const SetSystem& hse);
GadgetOutput gadget_min_radius_dag(const SetSystem& hse, std::size_t t);
GadgetOutput gadget_min_diameter_dag(const SetSystem& ov);
GadgetOutput gadget_min_diameter_weighted(const SetSystem& ov, std::size_t t);
GadgetOutput gadget_undirected_diameter_23(const SetSystem& ov);
GadgetOutput gadget_roundtrip_diameter(const SetSystem& ov);
GadgetOutput gadget_all_eccentricities(const SetSystem& ov);
GadgetOutput gadget_median(const SetSystem& hse);

const std::vector<std::string>& gadget_kinds();
SetProblem gadget_problem(const std::string& kind);
bool gadget_takes_stretch(const std::string& kind);
// t == 0 selects default_stretch (rounded up to even where required).
GadgetOutput make_gadget(const std::string& kind, const SetSystem& s, std::size_t t = 0);

struct GadgetCheck {
  bool ok = true;
  Distance observed;
  std::string message;  // empty when ok
};

// Measures the promised quantity with the exact oracle and checks the
// promise, DAG flag and path decomposition.
GadgetCheck verify_gadget(const GadgetOutput& g, const OracleConfig& config = {});

}  // namespace ecclab

#endif  // ECCLAB_GADGETS_HPP_
