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

#include <algorithm>
#include <set>

#include "ecclab/error.hpp"
#include "ecclab/generators.hpp"
#include "ecclab/oracle.hpp"
#include "ecclab/range_max.hpp"
#include "ecclab/rng.hpp"
#include "ecclab/three_layer.hpp"
#include "ecclab/traversal.hpp"
#include "ecclab/tree_decomposition.hpp"
#include "ecclab/treewidth.hpp"
#include "test_util.hpp"

namespace ecclab {
namespace {

Graph oriented(const Graph& g, Rng& rng) {
  return with_random_weights(random_orientation(g, 0.3, rng), 5, rng);
}

TEST(TreeDecomposition, ValidatesCoverage) {
  Graph g = test::undirected_path(3);
  TreeDecomposition td{3, {{0, 1}, {1, 2}}, {{0, 1}}};
  EXPECT_NO_THROW(validate_decomposition(g, td));
  EXPECT_EQ(td.width(), 1u);

  TreeDecomposition missing_edge{3, {{0, 1}, {2}}, {{0, 1}}};
  EXPECT_THROW(validate_decomposition(g, missing_edge), ValidationError);

  TreeDecomposition disconnected_vertex{3, {{0, 1}, {2}, {1, 2}}, {{0, 1}, {1, 2}}};
  EXPECT_THROW(validate_decomposition(g, disconnected_vertex), ValidationError);

  TreeDecomposition not_tree{3, {{0, 1}, {1, 2}}, {}};
  EXPECT_THROW(validate_decomposition(g, not_tree), ValidationError);
}

TEST(TreeDecomposition, GreedyIsValid) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    Graph g = random_undirected({40, 80, 1, false}, rng);
    EXPECT_NO_THROW(validate_decomposition(g, greedy_min_degree_decomposition(g)));
  }
}

TEST(PartialKTree, WidthAtMostK) {
  for (std::size_t k = 1; k <= 4; ++k) {
    Rng rng(k);
    auto pk = generate_partial_ktree(200, k, 0.7, rng);
    EXPECT_EQ(pk.graph.num_vertices(), 200u);
    EXPECT_LE(pk.decomposition.width(), k);
    EXPECT_NO_THROW(validate_decomposition(pk.graph, pk.decomposition));
  }
}

TEST(PortalSplit, Invariants) {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng(seed * 7 + k);
      auto pk = generate_partial_ktree(150, k, 0.8, rng);
      auto split = find_portal_split(pk.graph, pk.decomposition);
      std::size_t n = pk.graph.num_vertices();
      EXPECT_EQ(split.side.size() + split.complement.size(), n);
      EXPECT_LE(split.portals.size(), pk.decomposition.width());
      EXPECT_FALSE(split.side.empty());
      EXPECT_FALSE(split.complement.empty());
      std::vector<char> side(n, 0), portal(n, 0);
      for (Vertex v : split.side) side[v] = 1;
      for (Vertex p : split.portals) {
        EXPECT_TRUE(side[p]);
        portal[p] = 1;
      }
      for (Vertex v = 0; v < n; ++v) {
        if (!side[v] || portal[v]) continue;
        for (const Arc& a : pk.graph.out(v)) EXPECT_TRUE(side[a.head]);
      }
    }
  }
}

TEST(PortalSplit, RejectsTinyGraph) {
  Graph g = test::undirected_path(2);
  TreeDecomposition td{2, {{0, 1}}, {}};
  EXPECT_THROW(find_portal_split(g, td), InputError);
}

TEST(AugmentWithPortals, PreservesDistancesInsideSide) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    auto pk = generate_partial_ktree(120, 2, 0.8, rng);
    Graph g = oriented(pk.graph, rng);
    auto split = find_portal_split(pk.graph, pk.decomposition);
    Graph h = augment_with_portals(g, split.side, split.portals);
    ASSERT_EQ(h.num_vertices(), split.side.size());
    for (std::size_t i = 0; i < split.side.size(); ++i) {
      auto dg = shortest_paths(g, split.side[i]).dist;
      auto dh = shortest_paths(h, static_cast<Vertex>(i)).dist;
      for (std::size_t j = 0; j < split.side.size(); ++j) {
        ASSERT_EQ(dh[j], dg[split.side[j]]);
      }
    }
  }
}

TEST(TwEccentricities, SmallGraphsAllVariants) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    Graph u = random_undirected({12, 20, 3, false}, rng);
    TreeDecomposition td = greedy_min_degree_decomposition(u);
    Graph d = oriented(u, rng);
    for (Variant v : kAllVariants) {
      const Graph& g = v == Variant::kUndirected ? u : d;
      EXPECT_EQ(tw_eccentricities(g, td, v), exact_eccentricities(g, v)) << to_string(v);
    }
  }
}

TEST(TwEccentricities, PartialKTreesAllVariants) {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      Rng rng(100 * k + seed);
      auto pk = generate_partial_ktree(150, k, 0.8, rng);
      Graph d = oriented(pk.graph, rng);
      for (Variant v : kAllVariants) {
        const Graph& g = v == Variant::kUndirected ? pk.graph : d;
        auto want = test::brute_eccentricities(g, v);
        auto got = tw_eccentricities(g, pk.decomposition, v);
        for (Vertex x = 0; x < g.num_vertices(); ++x) {
          ASSERT_EQ(got.ecc[x], test::to_distance(want.ecc[x])) << to_string(v) << " k=" << k;
        }
      }
    }
  }
}

TEST(TwEccentricities, RejectsBadDecomposition) {
  Graph g = test::undirected_path(3);
  TreeDecomposition td{3, {{0, 1}, {2}}, {{0, 1}}};
  EXPECT_THROW(tw_eccentricities(g, td, Variant::kUndirected), ValidationError);
}

std::int64_t random_coord(Rng& rng) { return std::uniform_int_distribution<int>(-5, 5)(rng); }

TEST(RangeMax, MatchesLinearScan) {
  using Backend = RangeMaxIndex::Backend;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    std::size_t d = 1 + seed % 4;
    std::size_t n = std::uniform_int_distribution<std::size_t>(0, 80)(rng);
    std::vector<RangePoint> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < d; ++j) pts[i].coords.push_back(random_coord(rng));
      pts[i].value = std::uniform_int_distribution<int>(0, 20)(rng);
      pts[i].payload = i;
    }
    for (Backend b : {Backend::kRangeTree, Backend::kKdTree, Backend::kAuto}) {
      RangeMaxIndex index(d, pts, b);
      for (int q = 0; q < 50; ++q) {
        std::vector<std::int64_t> lo(d), hi(d);
        for (std::size_t j = 0; j < d; ++j) {
          lo[j] = random_coord(rng);
          hi[j] = random_coord(rng);
          if (lo[j] > hi[j]) std::swap(lo[j], hi[j]);
        }
        ASSERT_EQ(index.query(lo, hi), linear_scan_max(pts, lo, hi));
      }
    }
  }
}

TEST(RangeMax, EmptyRange) {
  RangeMaxIndex index(1, {{{3}, 7, 0}});
  std::vector<std::int64_t> lo{4}, hi{5};
  EXPECT_FALSE(index.query(lo, hi).has_value());
  lo = {3};
  EXPECT_EQ(index.query(lo, hi), (RangeHit{7, 0}));
}

ThreeLayerInstance random_instance(std::size_t a, std::size_t b, std::size_t c, Rng& rng,
                                   int inf_percent) {
  ThreeLayerInstance inst(a, b, c);
  auto pick = [&]() {
    if (std::uniform_int_distribution<int>(0, 99)(rng) < inf_percent) return kInfinity;
    return Distance(std::uniform_int_distribution<int>(0, 30)(rng));
  };
  for (auto& x : inst.ab) x = pick();
  for (auto& x : inst.bc) x = pick();
  return inst;
}

void expect_same(const std::vector<Farthest>& got, const std::vector<Farthest>& want) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    ASSERT_EQ(got[i].dist, want[i].dist) << i;
    ASSERT_EQ(got[i].witness, want[i].witness) << i;
  }
}

TEST(ThreeLayer, Example) {
  ThreeLayerInstance inst(1, 2, 2);
  inst.d_ab(0, 0) = Distance(1);
  inst.d_ab(0, 1) = Distance(4);
  inst.d_bc(0, 0) = Distance(2);
  inst.d_bc(0, 1) = Distance(5);
  inst.d_bc(1, 0) = Distance(1);
  inst.d_bc(1, 1) = Distance(1);
  auto r = three_layer_farthest(inst);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].dist, Distance(5));
  EXPECT_EQ(r[0].witness, std::optional<std::size_t>(1));
}

TEST(ThreeLayer, MatchesNaiveOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    auto size = [&](std::size_t hi) { return std::uniform_int_distribution<std::size_t>(0, hi)(rng); };
    std::size_t a = size(60), b = size(4), c = size(60);
    auto inst = random_instance(a, b, c, rng, static_cast<int>(seed % 4) * 15);
    expect_same(three_layer_farthest(inst), three_layer_farthest_naive(inst));
  }
}

TEST(ThreeLayer, ExhaustiveTinyInstances) {
  const Distance vals[] = {Distance(0), Distance(1), Distance(2), kInfinity};
  std::size_t checked = 0;
  for (std::size_t a = 1; a <= 2; ++a) {
    for (std::size_t b = 1; b <= 2; ++b) {
      for (std::size_t c = 1; c <= 2; ++c) {
        std::size_t cells = a * b + b * c;
        std::size_t total = std::size_t(1) << (2 * cells);
        for (std::size_t code = 0; code < total; ++code) {
          ThreeLayerInstance inst(a, b, c);
          std::size_t x = code;
          for (auto& v : inst.ab) v = vals[x & 3], x >>= 2;
          for (auto& v : inst.bc) v = vals[x & 3], x >>= 2;
          expect_same(three_layer_farthest(inst), three_layer_farthest_naive(inst));
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 0u);
}

}  // namespace
}  // namespace ecclab
