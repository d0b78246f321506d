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

#include "ecclab/gadgets.hpp"

#include <algorithm>
#include <sstream>

#include "ecclab/dg.hpp"
#include "ecclab/error.hpp"
#include "ecclab/traversal.hpp"

namespace ecclab {

std::string to_string(GadgetQuantity q) {
  switch (q) {
    case GadgetQuantity::kRadius: return "radius";
    case GadgetQuantity::kDiameter: return "diameter";
    case GadgetQuantity::kEccentricities: return "eccentricities";
    case GadgetQuantity::kMedian: return "median";
  }
  return "";
}

GadgetQuantity parse_gadget_quantity(const std::string& s) {
  for (auto q : {GadgetQuantity::kRadius, GadgetQuantity::kDiameter,
                 GadgetQuantity::kEccentricities, GadgetQuantity::kMedian}) {
    if (to_string(q) == s) return q;
  }
  throw InputError("unknown gadget quantity: " + s);
}

namespace {

using Set = std::vector<std::uint32_t>;

bool has(const Set& s, std::uint32_t u) { return std::binary_search(s.begin(), s.end(), u); }

void require(SetProblem want, const SetSystem& s) {
  check_set_system(s);
  if (s.problem != want) {
    throw InputError("gadget expects a " + to_string(want) + " instance");
  }
}

void require_nonempty(const SetSystem& s) {
  if (s.a.empty() || s.b.empty()) throw InputError("gadget expects nonempty lists");
}

void require_stretch(std::size_t t) {
  if (t < 2) throw InputError("stretch t must be at least 2");
}

// Vertex ids of the reduced hitting-set instance inside a gadget.
struct HseLayout {
  ReducedHittingSet reduced;
  bool answer = false;
  Vertex a0 = 0, u0 = 0, b0 = 0;
  std::size_t na = 0, nu = 0, nb = 0;
};

HseLayout hse_layout(const SetSystem& hse, GraphBuilder& builder) {
  require(SetProblem::kHittingSet, hse);
  HseLayout l;
  l.answer = solve_set_system(hse).answer;
  l.reduced = reduce_hitting_set(hse);
  const SetSystem& r = l.reduced.system;
  if (solve_set_system(r).answer != l.answer) throw Error("hitting-set reduction changed the answer");
  l.na = r.a.size();
  l.nu = r.universe;
  l.nb = r.b.size();
  l.a0 = builder.add_vertices(l.na);
  l.u0 = builder.add_vertices(l.nu);
  l.b0 = builder.add_vertices(l.nb);
  return l;
}

GadgetOutput hse_output(const std::string& kind, const HseLayout& l, const SetSystem& original) {
  GadgetOutput out;
  out.kind = kind;
  out.answer = l.answer;
  out.exact = l.answer;
  out.witness_map.assign(original.a.size(), std::nullopt);
  for (std::size_t i = 0; i < l.reduced.a_origin.size(); ++i) {
    out.witness_map[l.reduced.a_origin[i]] = static_cast<Vertex>(l.a0 + i);
  }
  return out;
}

struct OvLayout {
  bool answer = false;
  Vertex a0 = 0, c0 = 0, b0 = 0;
  std::size_t na = 0, d = 0, nb = 0;
};

OvLayout ov_layout(const SetSystem& ov, GraphBuilder& builder) {
  require(SetProblem::kOrthogonalVectors, ov);
  require_nonempty(ov);
  OvLayout l;
  l.answer = solve_set_system(ov).answer;
  l.na = ov.a.size();
  l.d = ov.universe;
  l.nb = ov.b.size();
  l.a0 = builder.add_vertices(l.na);
  l.c0 = builder.add_vertices(l.d);
  l.b0 = builder.add_vertices(l.nb);
  return l;
}

GadgetOutput ov_output(const std::string& kind, const OvLayout& l) {
  GadgetOutput out;
  out.kind = kind;
  out.answer = l.answer;
  out.exact = !l.answer;
  for (std::size_t i = 0; i < l.na; ++i) out.witness_map.push_back(static_cast<Vertex>(l.a0 + i));
  return out;
}

// The shared part of the source and max radius gadgets.
struct SourceParts {
  HseLayout l;
  Vertex x = 0;
  std::vector<std::vector<Vertex>> tails;  // per b
  std::vector<Vertex> heads;               // interior of every head path
};

SourceParts source_parts(const SetSystem& hse, std::size_t t, GraphBuilder& builder) {
  require_stretch(t);
  SourceParts p;
  p.l = hse_layout(hse, builder);
  const auto& l = p.l;
  const SetSystem& r = l.reduced.system;
  for (std::size_t i = 0; i < l.na; ++i) {
    for (auto u : r.a[i]) builder.add_edge(l.a0 + i, l.u0 + u);
  }
  for (std::size_t j = 0; j < l.nb; ++j) {
    for (auto u : r.b[j]) builder.add_edge(l.u0 + u, l.b0 + j);
  }
  p.x = builder.add_vertex();
  for (std::size_t j = 0; j < l.nb; ++j) {
    Vertex prev = l.b0 + j;
    p.tails.emplace_back();
    for (std::size_t s = 0; s + 1 < t; ++s) {
      Vertex v = builder.add_vertex();
      builder.add_edge(prev, v);
      p.tails.back().push_back(v);
      prev = v;
    }
  }
  for (std::size_t i = 0; i < l.na; ++i) {
    Vertex a = l.a0 + i;
    builder.add_edge(a, p.x);
    // Head path x -> a_1 -> ... -> a_{t-2} -> a.
    Vertex prev = p.x;
    for (std::size_t s = 0; s + 2 < t; ++s) {
      Vertex v = builder.add_vertex();
      builder.add_edge(prev, v);
      p.heads.push_back(v);
      prev = v;
    }
    builder.add_edge(prev, a);
  }
  return p;
}

}  // namespace

HseGraph build_hse_graph(const SetSystem& hse) {
  GraphBuilder builder(true);
  HseLayout l = hse_layout(hse, builder);
  const SetSystem& r = l.reduced.system;
  for (std::size_t i = 0; i < l.na; ++i) {
    for (auto u : r.a[i]) builder.add_edge(l.a0 + i, l.u0 + u);
  }
  for (std::size_t j = 0; j < l.nb; ++j) {
    for (auto u : r.b[j]) builder.add_edge(l.u0 + u, l.b0 + j);
  }
  return HseGraph{l.reduced, builder.build()};
}

Graph build_ov_graph(const SetSystem& ov) {
  require(SetProblem::kOrthogonalVectors, ov);
  GraphBuilder builder;
  Vertex a0 = builder.add_vertices(ov.a.size());
  Vertex c0 = builder.add_vertices(ov.universe);
  Vertex b0 = builder.add_vertices(ov.b.size());
  for (std::size_t i = 0; i < ov.a.size(); ++i) {
    for (auto c : ov.a[i]) builder.add_edge(a0 + i, c0 + c);
  }
  for (std::size_t j = 0; j < ov.b.size(); ++j) {
    for (auto c : ov.b[j]) builder.add_edge(c0 + c, b0 + j);
  }
  return builder.build();
}

std::size_t default_stretch(const SetSystem& s) {
  return std::max<std::size_t>(2, s.universe);
}

GadgetOutput gadget_radius_23(const SetSystem& hse) {
  GraphBuilder builder(true);
  HseLayout l = hse_layout(hse, builder);
  const SetSystem& r = l.reduced.system;
  Vertex x = builder.add_vertex(), y = builder.add_vertex(), z = builder.add_vertex();
  Vertex hub = builder.add_vertex();
  std::size_t dummies = std::max(l.na, l.nb) * l.nu;
  Vertex d0 = builder.add_vertices(dummies);
  for (std::size_t i = 0; i < l.na; ++i) {
    Vertex a = l.a0 + i;
    for (auto u : r.a[i]) builder.add_edge(a, l.u0 + u);
    builder.add_edge(a, x);
    builder.add_edge(a, y);
    builder.add_edge(a, hub);
  }
  for (std::size_t j = 0; j < l.nb; ++j) {
    for (auto u : r.b[j]) builder.add_edge(l.u0 + u, l.b0 + j);
  }
  for (std::size_t u = 0; u < l.nu; ++u) builder.add_edge(l.u0 + u, x);
  builder.add_edge(y, z);
  for (std::size_t k = 0; k < dummies; ++k) builder.add_edge(hub, d0 + k);

  GadgetOutput out = hse_output("radius-23", l, hse);
  out.graph = builder.build();
  out.variant = Variant::kUndirected;
  out.quantity = GadgetQuantity::kRadius;
  out.yes_value = Distance(2);
  out.no_bound = Distance(3);

  // Path decomposition: dummy bags, {hub, y, z}, then one bag per a and b.
  TreeDecomposition td;
  td.num_vertices = out.graph.num_vertices();
  std::vector<Vertex> us;
  for (std::size_t u = 0; u < l.nu; ++u) us.push_back(l.u0 + u);
  for (std::size_t k = 0; k < dummies; ++k) td.bags.push_back({hub, d0 + static_cast<Vertex>(k)});
  td.bags.push_back({hub, y, z});
  for (std::size_t i = 0; i < l.na; ++i) {
    auto bag = us;
    bag.insert(bag.end(), {x, y, hub, l.a0 + static_cast<Vertex>(i)});
    td.bags.push_back(bag);
  }
  for (std::size_t j = 0; j < l.nb; ++j) {
    auto bag = us;
    bag.insert(bag.end(), {x, l.b0 + static_cast<Vertex>(j)});
    td.bags.push_back(bag);
  }
  for (auto& bag : td.bags) std::sort(bag.begin(), bag.end());
  for (std::size_t k = 0; k + 1 < td.bags.size(); ++k) td.tree_edges.push_back({k, k + 1});
  out.pathwidth_witness = std::move(td);
  return out;
}

GadgetOutput gadget_source_radius(const SetSystem& hse, std::size_t t) {
  GraphBuilder builder;
  SourceParts p = source_parts(hse, t, builder);
  GadgetOutput out = hse_output("source-radius", p.l, hse);
  out.graph = builder.build();
  out.variant = Variant::kSource;
  out.quantity = GadgetQuantity::kRadius;
  out.yes_value = Distance(t + 1);
  out.no_bound = Distance(2 * t);
  return out;
}

GadgetOutput gadget_max_radius(const SetSystem& hse, std::size_t t) {
  // The reduced instance has no element shared by every b, as the
  // construction requires.
  GraphBuilder builder;
  SourceParts p = source_parts(hse, t, builder);
  const auto& l = p.l;
  for (std::size_t u = 0; u < l.nu; ++u) builder.add_edge(l.u0 + u, p.x);
  for (std::size_t j = 0; j < l.nb; ++j) {
    builder.add_edge(l.b0 + j, p.x);
    for (Vertex v : p.tails[j]) builder.add_edge(v, p.x);
  }
  // Head vertices of the other sets would otherwise be 2t-2 from the center.
  for (Vertex v : p.heads) builder.add_edge(v, p.x);
  GadgetOutput out = hse_output("max-radius", l, hse);
  out.graph = builder.build();
  out.variant = Variant::kMax;
  out.quantity = GadgetQuantity::kRadius;
  out.yes_value = Distance(t + 1);
  out.no_bound = Distance(2 * t);
  return out;
}

GadgetOutput gadget_roundtrip_radius(const SetSystem& hse) {
  constexpr Weight kLong = 3;
  GraphBuilder builder;
  HseLayout l = hse_layout(hse, builder);
  const SetSystem& r = l.reduced.system;
  // The layout's U and B blocks serve as C_1 and B_1.
  Vertex c1 = l.u0, b1 = l.b0;
  Vertex d1 = builder.add_vertices(l.nu);
  Vertex c2 = builder.add_vertices(l.nu);
  Vertex d2 = builder.add_vertices(l.nu);
  Vertex b2 = builder.add_vertices(l.nb);
  for (auto [c, d, b] : {std::tuple{c1, d1, b1}, std::tuple{c2, d2, b2}}) {
    for (std::size_t i = 0; i < l.na; ++i) {
      Vertex a = l.a0 + i;
      for (std::uint32_t u = 0; u < l.nu; ++u) {
        if (has(r.a[i], u)) {
          builder.add_edge(a, c + u);
          builder.add_edge(c + u, a, kLong);
          builder.add_edge(d + u, a);
          builder.add_edge(a, d + u, kLong);
        } else {
          builder.add_edge(a, c + u, kLong);
          builder.add_edge(c + u, a);
          builder.add_edge(a, d + u);
          builder.add_edge(d + u, a, kLong);
        }
      }
    }
    for (std::size_t j = 0; j < l.nb; ++j) {
      for (auto u : r.b[j]) {
        builder.add_edge(c + u, b + j);
        builder.add_edge(b + j, d + u);
      }
    }
  }
  GadgetOutput out = hse_output("roundtrip-radius", l, hse);
  out.graph = builder.build();
  out.variant = Variant::kRoundtrip;
  out.quantity = GadgetQuantity::kRadius;
  out.yes_value = Distance(4);
  out.no_bound = Distance(8);

  // Path decomposition: B_1 bags, A bags, B_2 bags.
  TreeDecomposition td;
  td.num_vertices = out.graph.num_vertices();
  auto block = [&](Vertex first) {
    std::vector<Vertex> v;
    for (std::size_t u = 0; u < l.nu; ++u) v.push_back(first + static_cast<Vertex>(u));
    return v;
  };
  auto with = [](std::vector<Vertex> base, const std::vector<Vertex>& more) {
    base.insert(base.end(), more.begin(), more.end());
    return base;
  };
  auto side1 = with(block(c1), block(d1));
  auto side2 = with(block(c2), block(d2));
  auto both = with(side1, side2);
  for (std::size_t j = 0; j < l.nb; ++j) td.bags.push_back(with(side1, {b1 + static_cast<Vertex>(j)}));
  for (std::size_t i = 0; i < l.na; ++i) td.bags.push_back(with(both, {l.a0 + static_cast<Vertex>(i)}));
  for (std::size_t j = 0; j < l.nb; ++j) td.bags.push_back(with(side2, {b2 + static_cast<Vertex>(j)}));
  for (auto& bag : td.bags) std::sort(bag.begin(), bag.end());
  for (std::size_t k = 0; k + 1 < td.bags.size(); ++k) td.tree_edges.push_back({k, k + 1});
  out.pathwidth_witness = std::move(td);
  return out;
}

GadgetOutput gadget_min_radius_dag(const SetSystem& hse, std::size_t t) {
  require_stretch(t);
  GraphBuilder builder;
  HseLayout l = hse_layout(hse, builder);
  const SetSystem& r = l.reduced.system;
  std::vector<Vertex> as;
  for (std::size_t i = 0; i < l.na; ++i) {
    Vertex a = l.a0 + i;
    as.push_back(a);
    for (auto u : r.a[i]) builder.add_edge(a, l.u0 + u);
  }
  for (std::size_t j = 0; j < l.nb; ++j) {
    for (auto u : r.b[j]) builder.add_edge(l.u0 + u, l.b0 + j);
    Vertex prev = l.b0 + j;
    for (std::size_t s = 0; s + 1 < t; ++s) {
      Vertex v = builder.add_vertex();
      builder.add_edge(prev, v);
      prev = v;
    }
  }
  add_dg(builder, as, t);
  add_dg(builder, as, t);
  Vertex x1 = builder.add_vertices(t);
  for (std::size_t s = 0; s + 1 < t; ++s) builder.add_edge(x1 + s, x1 + s + 1);
  Vertex y = builder.add_vertex();
  for (Vertex a : as) {
    builder.add_edge(a, x1);
    builder.add_edge(a, y);
  }
  for (std::size_t u = 0; u < l.nu; ++u) builder.add_edge(x1 + t - 1, l.u0 + u);

  GadgetOutput out = hse_output("min-radius-dag", l, hse);
  out.graph = builder.build();
  out.variant = Variant::kMin;
  out.quantity = GadgetQuantity::kRadius;
  out.yes_value = Distance(t + 1);
  out.no_bound = Distance(2 * t);
  out.is_dag = true;
  return out;
}

GadgetOutput gadget_min_diameter_dag(const SetSystem& ov) {
  GraphBuilder builder;
  OvLayout l = ov_layout(ov, builder);
  std::vector<Vertex> as, bs, cs;
  for (std::size_t i = 0; i < l.na; ++i) {
    as.push_back(l.a0 + i);
    for (auto c : ov.a[i]) builder.add_edge(l.a0 + i, l.c0 + c);
  }
  for (std::size_t c = 0; c < l.d; ++c) cs.push_back(l.c0 + c);
  for (std::size_t j = 0; j < l.nb; ++j) {
    bs.push_back(l.b0 + j);
    for (auto c : ov.b[j]) builder.add_edge(l.c0 + c, l.b0 + j);
  }
  DgFragment fa = add_dg(builder, as, 1);
  DgFragment fb = add_dg(builder, bs, 1);
  DgFragment fc = add_dg(builder, cs, 1);
  Vertex x = builder.add_vertex(), y = builder.add_vertex();
  builder.add_edge(x, y);
  for (std::size_t k = 0; k < fa.vertices.size(); ++k) {
    builder.add_edge(fa.vertices[k], x);
    if (!fa.is_input[k]) builder.add_edge(fa.vertices[k], y);
  }
  for (Vertex c : fc.vertices) {
    builder.add_edge(x, c);
    builder.add_edge(c, y);
  }
  for (std::size_t k = 0; k < fb.vertices.size(); ++k) {
    builder.add_edge(y, fb.vertices[k]);
    // Without these arcs a vertex of A is three steps from the tree part of DG(B).
    if (!fb.is_input[k]) builder.add_edge(x, fb.vertices[k]);
  }
  GadgetOutput out = ov_output("min-diameter-dag", l);
  out.graph = builder.build();
  out.variant = Variant::kMin;
  out.quantity = GadgetQuantity::kDiameter;
  out.yes_value = Distance(2);
  out.no_bound = Distance(3);
  out.is_dag = true;
  return out;
}

GadgetOutput gadget_min_diameter_weighted(const SetSystem& ov, std::size_t t) {
  require_stretch(t);
  if (t % 2 != 0) throw InputError("stretch t must be even");
  Weight half = static_cast<Weight>(t / 2), full = static_cast<Weight>(t);
  GraphBuilder builder;
  OvLayout l = ov_layout(ov, builder);
  Vertex x = builder.add_vertex(), y = builder.add_vertex(), z = builder.add_vertex();
  for (std::size_t i = 0; i < l.na; ++i) {
    Vertex a = l.a0 + i;
    for (auto c : ov.a[i]) builder.add_edge(a, l.c0 + c, half);
    builder.add_edge(a, x, 1);
    builder.add_edge(x, a, full);
  }
  for (std::size_t j = 0; j < l.nb; ++j) {
    Vertex b = l.b0 + j;
    for (auto c : ov.b[j]) builder.add_edge(l.c0 + c, b, half);
    builder.add_edge(b, y, full);
    builder.add_edge(y, b, 1);
  }
  for (std::size_t c = 0; c < l.d; ++c) {
    builder.add_edge(l.c0 + c, x, 1);
    builder.add_edge(y, l.c0 + c, 1);
    builder.add_edge(l.c0 + c, z, half);
    builder.add_edge(z, l.c0 + c, half);
  }
  builder.add_edge(y, x, 1);
  GadgetOutput out = ov_output("min-diameter-weighted", l);
  out.graph = builder.build();
  out.variant = Variant::kMin;
  out.quantity = GadgetQuantity::kDiameter;
  out.yes_value = Distance(t + 1);
  out.no_bound = Distance(2 * t);
  return out;
}

namespace {

Graph undirected_diameter_graph(const SetSystem& ov, OvLayout& l) {
  GraphBuilder builder(true);
  l = ov_layout(ov, builder);
  Vertex x = builder.add_vertex(), y = builder.add_vertex();
  for (std::size_t i = 0; i < l.na; ++i) {
    for (auto c : ov.a[i]) builder.add_edge(l.a0 + i, l.c0 + c);
    builder.add_edge(l.a0 + i, x);
  }
  for (std::size_t j = 0; j < l.nb; ++j) {
    for (auto c : ov.b[j]) builder.add_edge(l.c0 + c, l.b0 + j);
    builder.add_edge(l.b0 + j, y);
  }
  for (std::size_t c = 0; c < l.d; ++c) {
    builder.add_edge(l.c0 + c, x);
    builder.add_edge(l.c0 + c, y);
  }
  builder.add_edge(x, y);
  return builder.build();
}

}  // namespace

GadgetOutput gadget_undirected_diameter_23(const SetSystem& ov) {
  OvLayout l;
  Graph g = undirected_diameter_graph(ov, l);
  GadgetOutput out = ov_output("undirected-diameter-23", l);
  out.graph = std::move(g);
  out.variant = Variant::kUndirected;
  out.quantity = GadgetQuantity::kDiameter;
  out.yes_value = Distance(2);
  out.no_bound = Distance(3);
  return out;
}

GadgetOutput gadget_roundtrip_diameter(const SetSystem& ov) {
  OvLayout l;
  Graph g = undirected_diameter_graph(ov, l);
  GadgetOutput out = ov_output("roundtrip-diameter", l);
  out.graph = g.as_directed();
  out.variant = Variant::kRoundtrip;
  out.quantity = GadgetQuantity::kDiameter;
  out.yes_value = Distance(4);
  out.no_bound = Distance(6);
  return out;
}

GadgetOutput gadget_all_eccentricities(const SetSystem& ov) {
  require(SetProblem::kOrthogonalVectors, ov);
  require_nonempty(ov);
  // A zero vector in B gets a private coordinate shared with no vector of A,
  // which keeps orthogonality and connects it to the coordinate layer.
  bool zero_b = std::any_of(ov.b.begin(), ov.b.end(), [](const Set& s) { return s.empty(); });
  GraphBuilder builder(true);
  OvLayout l;
  l.answer = solve_set_system(ov).answer;
  l.na = ov.a.size();
  l.nb = ov.b.size();
  l.d = ov.universe + (zero_b ? 1 : 0);
  l.a0 = builder.add_vertices(l.na);
  l.c0 = builder.add_vertices(l.d);
  l.b0 = builder.add_vertices(l.nb);
  Vertex b_copy = builder.add_vertices(l.nb);
  Vertex x = builder.add_vertex(), y = builder.add_vertex();
  auto b_vectors = to_bitsets(ov.b, ov.universe);
  std::vector<std::size_t> orthogonal(l.na, 0);
  for (std::size_t i = 0; i < l.na; ++i) {
    for (auto c : ov.a[i]) builder.add_edge(l.a0 + i, l.c0 + c);
    builder.add_edge(l.a0 + i, x);
    BitSet a = to_bitsets({ov.a[i]}, ov.universe).front();
    for (const auto& b : b_vectors) orthogonal[i] |= !a.intersects(b);
  }
  for (std::size_t j = 0; j < l.nb; ++j) {
    for (auto c : ov.b[j]) builder.add_edge(l.c0 + c, l.b0 + j);
    if (ov.b[j].empty()) builder.add_edge(l.c0 + ov.universe, l.b0 + j);
    builder.add_edge(l.b0 + j, b_copy + j);
  }
  for (std::size_t c = 0; c < l.d; ++c) builder.add_edge(l.c0 + c, y);
  builder.add_edge(x, y);

  GadgetOutput out = ov_output("all-ecc", l);
  out.exact = true;
  out.graph = builder.build();
  out.variant = Variant::kUndirected;
  out.quantity = GadgetQuantity::kEccentricities;
  out.yes_value = Distance(4);
  out.no_bound = Distance(4);
  for (std::size_t i = 0; i < l.na; ++i) {
    out.vertex_checks.push_back({l.a0 + static_cast<Vertex>(i), Distance(orthogonal[i] ? 5 : 3)});
  }
  out.vertex_checks.push_back({x, Distance(4)});
  return out;
}

GadgetOutput gadget_median(const SetSystem& hse) {
  GraphBuilder builder(true);
  HseLayout l = hse_layout(hse, builder);
  const SetSystem& r = l.reduced.system;
  std::size_t pendants = std::max(l.na, l.nb) * l.nu;
  Vertex un = builder.add_vertices(l.nu);
  std::vector<Vertex> hubs;
  for (int h = 0; h < 3; ++h) {
    Vertex hub = builder.add_vertex();
    hubs.push_back(hub);
    Vertex first = builder.add_vertices(pendants);
    for (std::size_t k = 0; k < pendants; ++k) builder.add_edge(hub, first + k);
  }
  for (std::size_t i = 0; i < l.na; ++i) {
    Vertex a = l.a0 + i;
    for (std::uint32_t u = 0; u < l.nu; ++u) {
      builder.add_edge(a, has(r.a[i], u) ? l.u0 + u : un + u);
    }
    builder.add_edge(a, hubs[0]);
  }
  for (std::size_t j = 0; j < l.nb; ++j) {
    for (auto u : r.b[j]) builder.add_edge(l.u0 + u, l.b0 + j);
    builder.add_edge(l.b0 + j, hubs[1]);
  }
  for (std::size_t u = 0; u < l.nu; ++u) builder.add_edge(un + u, hubs[2]);

  GadgetOutput out = hse_output("median", l, hse);
  out.graph = builder.build();
  out.variant = Variant::kUndirected;
  out.quantity = GadgetQuantity::kMedian;
  std::uint64_t best = 9 * pendants + 2 * l.na + 2 * l.nb + 4 * l.nu + 4;
  out.yes_value = Distance(best);
  out.no_bound = Distance(best + 2);
  return out;
}

const std::vector<std::string>& gadget_kinds() {
  static const std::vector<std::string> kinds = {
      "radius-23",       "source-radius",         "max-radius",
      "roundtrip-radius", "min-radius-dag",       "min-diameter-dag",
      "min-diameter-weighted", "undirected-diameter-23", "roundtrip-diameter",
      "all-ecc",         "median"};
  return kinds;
}

SetProblem gadget_problem(const std::string& kind) {
  static const std::vector<std::string> ov = {"min-diameter-dag", "min-diameter-weighted",
                                              "undirected-diameter-23", "roundtrip-diameter",
                                              "all-ecc"};
  if (std::find(gadget_kinds().begin(), gadget_kinds().end(), kind) == gadget_kinds().end()) {
    throw InputError("unknown gadget kind: " + kind);
  }
  return std::find(ov.begin(), ov.end(), kind) != ov.end() ? SetProblem::kOrthogonalVectors
                                                            : SetProblem::kHittingSet;
}

bool gadget_takes_stretch(const std::string& kind) {
  return kind == "source-radius" || kind == "max-radius" || kind == "min-radius-dag" ||
         kind == "min-diameter-weighted";
}

GadgetOutput make_gadget(const std::string& kind, const SetSystem& s, std::size_t t) {
  if (gadget_problem(kind) != s.problem) {
    throw InputError("gadget " + kind + " expects a " + to_string(gadget_problem(kind)) +
                     " instance");
  }
  if (t == 0) {
    t = default_stretch(s);
    if (kind == "min-diameter-weighted" && t % 2) ++t;
  }
  if (kind == "radius-23") return gadget_radius_23(s);
  if (kind == "source-radius") return gadget_source_radius(s, t);
  if (kind == "max-radius") return gadget_max_radius(s, t);
  if (kind == "roundtrip-radius") return gadget_roundtrip_radius(s);
  if (kind == "min-radius-dag") return gadget_min_radius_dag(s, t);
  if (kind == "min-diameter-dag") return gadget_min_diameter_dag(s);
  if (kind == "min-diameter-weighted") return gadget_min_diameter_weighted(s, t);
  if (kind == "undirected-diameter-23") return gadget_undirected_diameter_23(s);
  if (kind == "roundtrip-diameter") return gadget_roundtrip_diameter(s);
  if (kind == "all-ecc") return gadget_all_eccentricities(s);
  return gadget_median(s);
}

GadgetCheck verify_gadget(const GadgetOutput& g, const OracleConfig& config) {
  GadgetCheck check;
  auto fail = [&](const std::string& msg) {
    if (check.ok) check.message = msg;
    check.ok = false;
  };
  if (g.is_dag) {
    try {
      topological_order(g.graph);
    } catch (const CyclicError&) {
      fail("graph flagged acyclic has a cycle");
    }
  }
  if (g.pathwidth_witness) {
    try {
      validate_decomposition(g.graph, *g.pathwidth_witness);
    } catch (const ValidationError& e) {
      fail(std::string("path decomposition invalid: ") + e.what());
    }
  }
  switch (g.quantity) {
    case GadgetQuantity::kRadius:
    case GadgetQuantity::kDiameter: {
      auto report = exact_eccentricities(g.graph, g.variant, config);
      check.observed = g.quantity == GadgetQuantity::kRadius ? report.radius : report.diameter;
      break;
    }
    case GadgetQuantity::kMedian:
      check.observed = exact_median(g.graph, config).sum;
      break;
    case GadgetQuantity::kEccentricities:
      for (const auto& vc : g.vertex_checks) {
        Distance e = eccentricity_of(g.graph, g.variant, vc.vertex);
        if (e != vc.ecc) {
          std::ostringstream msg;
          msg << "vertex " << vc.vertex << " eccentricity " << e << " expected " << vc.ecc;
          fail(msg.str());
          check.observed = e;
        }
      }
      return check;
  }
  std::ostringstream msg;
  if (g.exact && check.observed != g.yes_value) {
    msg << to_string(g.quantity) << ' ' << check.observed << " expected " << g.yes_value;
    fail(msg.str());
  } else if (!g.exact && check.observed < g.no_bound) {
    msg << to_string(g.quantity) << ' ' << check.observed << " below bound " << g.no_bound;
    fail(msg.str());
  }
  return check;
}

}  // namespace ecclab
