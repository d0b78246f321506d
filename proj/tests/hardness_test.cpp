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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "ecclab/dg.hpp"
#include "ecclab/error.hpp"
#include "ecclab/gadgets.hpp"
#include "ecclab/generators.hpp"
#include "ecclab/hash_reduction.hpp"
#include "ecclab/oracle.hpp"
#include "ecclab/rng.hpp"
#include "ecclab/set_system.hpp"
#include "ecclab/tree_decomposition.hpp"
#include "test_util.hpp"

namespace ecclab {
namespace {

SetSystem make(SetProblem p, std::size_t d, std::vector<std::vector<std::uint32_t>> a,
               std::vector<std::vector<std::uint32_t>> b) {
  return SetSystem{p, d, std::move(a), std::move(b)};
}

std::vector<std::size_t> stretches(const std::string& kind) {
  if (!gadget_takes_stretch(kind)) return {0};
  if (kind == "min-diameter-weighted") return {2, 4};
  return {2, 3};
}

TEST(SetSystem, SolverExamples) {
  auto ov = make(SetProblem::kOrthogonalVectors, 3, {{0, 1}, {2}}, {{0, 2}, {1}});
  auto sol = solve_set_system(ov);
  EXPECT_TRUE(sol.answer);
  EXPECT_EQ(sol.pair, (std::pair<std::size_t, std::size_t>{1, 1}));

  auto hse = make(SetProblem::kHittingSet, 3, {{0}, {0, 1}}, {{0, 2}, {1}});
  auto hs = solve_set_system(hse);
  EXPECT_TRUE(hs.answer);
  EXPECT_EQ(hs.hitter, std::optional<std::size_t>(1));

  hse.b.push_back({2});
  EXPECT_FALSE(solve_set_system(hse).answer);
}

TEST(SetSystem, RejectsOutOfRangeElements) {
  auto s = make(SetProblem::kOrthogonalVectors, 2, {{2}}, {{0}});
  EXPECT_THROW(check_set_system(s), InputError);
}

TEST(SetSystem, SolverMatchesNaiveExhaustively) {
  for (SetProblem p : {SetProblem::kOrthogonalVectors, SetProblem::kHittingSet}) {
    test::for_each_set_system(p, 2, 3, [&](const SetSystem& s) {
      bool want = p == SetProblem::kHittingSet ? test::naive_hitting(s) : test::naive_orthogonal(s);
      ASSERT_EQ(solve_set_system(s).answer, want);
    });
  }
}

TEST(SetSystem, RandomRoundTrip) {
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    auto s = random_set_system(i % 2 ? SetProblem::kHittingSet : SetProblem::kOrthogonalVectors,
                               5, 7, 9, 0.4, rng);
    std::stringstream buf;
    write_set_system(buf, s);
    EXPECT_EQ(read_set_system(buf), s);
  }
}

TEST(ReduceHittingSet, DropsDominatedSet) {
  auto s = make(SetProblem::kHittingSet, 3, {{1}, {1, 2}}, {{1, 2}, {0, 1}});
  auto r = reduce_hitting_set(s);
  EXPECT_EQ(solve_set_system(r.system).answer, solve_set_system(s).answer);
  for (std::size_t origin : r.a_origin) EXPECT_NE(origin, 0u);
}

TEST(ReduceHittingSet, PreservesAnswerExhaustively) {
  test::for_each_set_system(SetProblem::kHittingSet, 2, 3, [&](const SetSystem& s) {
    auto r = reduce_hitting_set(s);
    ASSERT_EQ(solve_set_system(r.system).answer, test::naive_hitting(s));
    if (r.collapsed) return;
    ASSERT_EQ(r.a_origin.size(), r.system.a.size());
    for (const auto& b : r.system.b) ASSERT_FALSE(b.empty());
  });
}

TEST(OvGraph, TwoPathsMatchIntersections) {
  Rng rng(2);
  auto s = random_set_system(SetProblem::kOrthogonalVectors, 6, 5, 8, 0.3, rng);
  auto d = test::floyd_warshall(build_ov_graph(s));
  std::size_t b0 = s.a.size() + s.universe;
  for (std::size_t i = 0; i < s.a.size(); ++i) {
    for (std::size_t j = 0; j < s.b.size(); ++j) {
      bool meets = false;
      for (auto e : s.a[i]) {
        for (auto f : s.b[j]) meets = meets || e == f;
      }
      EXPECT_EQ(d[i][b0 + j], meets ? 2u : test::kInf);
    }
  }
}

TEST(Gadgets, KindsAreComplete) {
  EXPECT_EQ(gadget_kinds().size(), 11u);
  for (const auto& kind : gadget_kinds()) EXPECT_NO_THROW(gadget_problem(kind));
  EXPECT_THROW(gadget_problem("nope"), InputError);
}

TEST(Gadgets, PromisesHoldExhaustively) {
  for (const auto& kind : gadget_kinds()) {
    std::size_t checked = 0;
    for (std::size_t d = 1; d <= 2; ++d) {
      test::for_each_set_system(gadget_problem(kind), 2, d, [&](const SetSystem& s) {
        for (std::size_t t : stretches(kind)) {
          auto g = make_gadget(kind, s, t);
          auto bad = test::gadget_violation(g, s);
          ASSERT_FALSE(bad.has_value()) << *bad << " t=" << t;
          ++checked;
        }
      });
    }
    EXPECT_GT(checked, 0u) << kind;
  }
}

TEST(Gadgets, PromisesHoldOnRandomInstances) {
  for (const auto& kind : gadget_kinds()) {
    Rng rng = substream(11, kind);
    for (int i = 0; i < 12; ++i) {
      auto s = random_set_system(gadget_problem(kind), 2 + i % 5, 2 + i % 4, 3 + i % 4,
                                 0.25 + 0.05 * (i % 6), rng);
      for (std::size_t t : stretches(kind)) {
        auto g = make_gadget(kind, s, t);
        auto bad = test::gadget_violation(g, s);
        ASSERT_FALSE(bad.has_value()) << *bad;
        EXPECT_TRUE(verify_gadget(g).ok) << kind;
      }
    }
  }
}

TEST(Gadgets, DagFlagsAndPathDecompositions) {
  Rng rng(5);
  for (const auto& kind : gadget_kinds()) {
    auto s = random_set_system(gadget_problem(kind), 4, 4, 5, 0.4, rng);
    auto g = make_gadget(kind, s, stretches(kind).front());
    if (kind == "min-radius-dag" || kind == "min-diameter-dag") EXPECT_TRUE(g.is_dag) << kind;
    if (g.pathwidth_witness) {
      EXPECT_NO_THROW(validate_decomposition(g.graph, *g.pathwidth_witness)) << kind;
      EXPECT_LE(g.pathwidth_witness->tree_edges.size() + 1, g.pathwidth_witness->bags.size() + 1);
    }
  }
}

TEST(Gadgets, RadiusCenterIsHittingSet) {
  auto s = make(SetProblem::kHittingSet, 3, {{0}, {1, 2}}, {{0, 1}, {0, 2}, {1, 2}});
  auto g = gadget_radius_23(s);
  ASSERT_TRUE(g.answer);
  ASSERT_TRUE(g.witness_map[1].has_value());
  EXPECT_EQ(eccentricity_of(g.graph, g.variant, *g.witness_map[1]), Distance(2));
}

TEST(Gadgets, TamperedValueFailsVerification) {
  auto s = make(SetProblem::kHittingSet, 2, {{0, 1}}, {{0}, {1}});
  auto g = gadget_radius_23(s);
  ASSERT_TRUE(verify_gadget(g).ok);
  g.yes_value = Distance(3);
  auto check = verify_gadget(g);
  EXPECT_FALSE(check.ok);
  EXPECT_EQ(check.observed, Distance(2));
}

TEST(Dg, DistancesForAllSizes) {
  for (std::size_t t = 1; t <= 3; ++t) {
    for (std::size_t size = 1; size <= 20; ++size) {
      auto dg = build_dg(size, t);
      auto d = test::floyd_warshall(dg.graph);
      const auto& x = dg.fragment.leaves;
      ASSERT_EQ(x.size(), size);
      std::uint64_t worst = 0;
      for (std::size_t i = 0; i < dg.graph.num_vertices(); ++i) {
        for (std::size_t j = 0; j < dg.graph.num_vertices(); ++j) {
          if (i != j) {
            ASSERT_FALSE(d[i][j] != test::kInf && d[j][i] != test::kInf);
            worst = std::max(worst, std::min(d[i][j], d[j][i]));
          }
        }
      }
      EXPECT_LE(worst, t + 1);
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
          EXPECT_EQ(std::min(d[x[i]][x[j]], d[x[j]][x[i]]), t + 1);
          EXPECT_EQ(d[x[j]][x[i]], test::kInf);
        }
      }
      EXPECT_FALSE(check_dg_distances(dg.graph, dg.fragment).has_value());
      double bound = 4.0 * t * size * (1 + std::log2(double(size)));
      EXPECT_LE(double(dg.graph.num_vertices()), bound + 4);
    }
  }
}

TEST(Dg, DetectsMissingArc) {
  auto dg = build_dg(4, 2);
  auto edges = dg.graph.edges();
  edges.pop_back();
  Graph broken(dg.graph.num_vertices(), edges, false);
  EXPECT_TRUE(check_dg_distances(broken, dg.fragment).has_value());
}

Graph complete_with_pendant(std::size_t k) {
  GraphBuilder b(true);
  b.add_vertices(k + 1);
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) b.add_edge(u, v);
  }
  b.add_edge(0, static_cast<Vertex>(k));
  return b.build();
}

TEST(HashReduction, CompleteGraphWithPendant) {
  Rng rng(1);
  Graph g = complete_with_pendant(10);
  EXPECT_EQ(reduce_decision23(g, DecisionTarget::kDiameter, {}, rng).value, 2);
  EXPECT_EQ(reduce_decision23(g, DecisionTarget::kRadius, {}, rng).value, 2);
}

TEST(HashReduction, PathOfFour) {
  Rng rng(1);
  Graph g = test::undirected_path(4);
  HashReductionOptions opts{3, 20};
  EXPECT_EQ(reduce_decision23(g, DecisionTarget::kDiameter, opts, rng).value, 3);
  EXPECT_EQ(reduce_decision23(g, DecisionTarget::kRadius, opts, rng).value, 2);
}

TEST(HashReduction, RejectsWeightedOrDirected) {
  Rng rng(1);
  EXPECT_THROW(reduce_decision23(test::directed_path(3), DecisionTarget::kDiameter, {}, rng),
               InputError);
  Graph w(2, {{0, 1, 2}}, true);
  EXPECT_THROW(reduce_decision23(w, DecisionTarget::kDiameter, {}, rng), InputError);
}

TEST(HashReduction, OneSidedOnGadgets) {
  Rng gen(8);
  for (int i = 0; i < 40; ++i) {
    auto s = random_set_system(SetProblem::kOrthogonalVectors, 4 + i % 4, 4 + i % 3, 6, 0.5, gen);
    auto g = gadget_undirected_diameter_23(s);
    auto truth = test::eccentricities_from_matrix(test::dijkstra_matrix(g.graph),
                                                  Variant::kUndirected);
    Rng rng = substream(i, "hash");
    auto r = reduce_decision23(g.graph, DecisionTarget::kDiameter, {}, rng);
    if (truth.diameter == 2) {
      EXPECT_EQ(r.value, 2);
    } else {
      EXPECT_EQ(truth.diameter, 3u);
    }
  }
}

TEST(HashReduction, DefaultDeltaIsSqrtN) {
  Rng rng(3);
  Graph g = complete_with_pendant(15);
  auto r = reduce_decision23(g, DecisionTarget::kDiameter, {}, rng);
  EXPECT_EQ(r.delta, 4u);
}

}  // namespace
}  // namespace ecclab
