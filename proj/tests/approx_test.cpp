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

#include "ecclab/approx.hpp"
#include "ecclab/error.hpp"
#include "ecclab/generators.hpp"
#include "ecclab/oracle.hpp"
#include "ecclab/rng.hpp"
#include "test_util.hpp"

namespace ecclab {
namespace {

std::uint64_t min_radius(const Graph& g) {
  return test::brute_eccentricities(g, Variant::kMin).radius;
}

TEST(ApproxSourceRadius, SingleVertex) {
  Rng rng(1);
  auto r = approx_source_radius(Graph(1, {}, false), rng);
  EXPECT_EQ(r.estimate, Distance(0));
  EXPECT_TRUE(r.whp);
  EXPECT_EQ(r.upper, (Rational{2, 1}));
}

TEST(ApproxSourceRadius, OutStar) {
  for (std::size_t n : {2, 5, 17, 64}) {
    GraphBuilder b;
    b.add_vertices(n);
    for (Vertex v = 1; v < n; ++v) b.add_edge(0, v);
    Rng rng(n);
    auto r = approx_source_radius(b.build(), rng);
    EXPECT_EQ(r.estimate, Distance(1));
  }
}

TEST(ApproxSourceRadius, EstimateIsRealEccentricityAndWithinTwo) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng gen(seed);
    Graph g = random_digraph({80, 320, seed % 2 ? 1u : 5u, true}, gen);
    Rng rng = substream(seed, "alg1");
    auto r = approx_source_radius(g, rng);
    ASSERT_TRUE(r.witness_center.has_value());
    EXPECT_EQ(r.estimate, eccentricity_of(g, Variant::kSource, *r.witness_center));
    Distance radius = exact_eccentricities(g, Variant::kSource).radius;
    EXPECT_GE(r.estimate, radius);
    EXPECT_LE(r.estimate, radius + radius);
  }
}

TEST(ApproxSourceRadius, Reproducible) {
  Rng gen(3);
  Graph g = random_digraph({100, 400, 1, true}, gen);
  Rng a = substream(9, "x"), b = substream(9, "x");
  auto ra = approx_source_radius(g, a);
  auto rb = approx_source_radius(g, b);
  EXPECT_EQ(ra.estimate, rb.estimate);
  EXPECT_EQ(ra.witness_center, rb.witness_center);
}

TEST(HittingSetSize, Formula) {
  EXPECT_EQ(hitting_set_size(1, 1.0, 2.0), 1u);
  EXPECT_EQ(hitting_set_size(100, 10.0, 2.0), 93u);  // ceil(2 * 10 * ln 100) = 93
  EXPECT_EQ(hitting_set_size(10, 10.0, 2.0), 10u);
}

TEST(ApproxMinDiameter, NoEdges) {
  Rng rng(1);
  EXPECT_EQ(approx_min_diameter(Graph(4, {}, false), Rational{1, 2}, rng).estimate, kInfinity);
  EXPECT_EQ(approx_min_diameter(Graph(1, {}, false), Rational{1, 2}, rng).estimate, Distance(0));
}

TEST(ApproxMinDiameter, RejectsWeights) {
  Rng rng(1);
  EXPECT_THROW(approx_min_diameter(Graph(2, {{0, 1, 3}}, false), Rational{1, 2}, rng), InputError);
  EXPECT_THROW(approx_min_diameter(Graph(2, {{0, 1, 1}}, false), Rational{0, 1}, rng), InputError);
}

TEST(ApproxMinDiameter, CycleWithinFactor) {
  for (std::size_t n : {5, 12, 40, 99}) {
    Graph g = test::directed_cycle(n);
    std::uint64_t d = n / 2;
    double factor = std::max(3.0, std::sqrt(double(n)));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng = substream(seed, "cycle");
      auto r = approx_min_diameter(g, Rational{1, 2}, rng);
      EXPECT_LE(r.estimate, Distance(d));
      EXPECT_LE(double(d), factor * double(r.estimate.value()));
    }
  }
}

TEST(ApproxMinDiameter, NeverExceedsTruth) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng gen(seed);
    Graph g = random_digraph({60, 150, 1, seed % 2 == 0}, gen);
    Rng rng = substream(seed, "md");
    auto r = approx_min_diameter(g, Rational{1, 3}, rng);
    EXPECT_LE(r.estimate, exact_eccentricities(g, Variant::kMin).diameter);
  }
}

TEST(ApproxMinDiameterDag, DirectedPath) {
  auto r = approx_min_diameter_dag(test::directed_path(10));
  EXPECT_GE(r.estimate, Distance(5));
  EXPECT_LE(r.estimate, Distance(9));
  EXPECT_FALSE(r.whp);
}

TEST(ApproxMinDiameterDag, Disconnected) {
  EXPECT_EQ(approx_min_diameter_dag(Graph(2, {}, false)).estimate, kInfinity);
}

TEST(ApproxMinDiameterDag, RejectsCycles) {
  EXPECT_THROW(approx_min_diameter_dag(test::directed_cycle(3)), CyclicError);
}

TEST(ApproxMinDiameterDag, FactorTwoOnRandomDags) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng gen(seed);
    Graph g = random_dag({50, 120, seed % 3 ? 1u : 4u, true}, gen);
    Distance d = exact_eccentricities(g, Variant::kMin).diameter;
    Distance e = approx_min_diameter_dag(g).estimate;
    EXPECT_LE(e, d);
    EXPECT_LE(d, e + e);
  }
}

TEST(FiniteMinEccentricities, SmallCases) {
  EXPECT_EQ(finite_min_eccentricities(test::directed_cycle(4)), std::vector<bool>(4, true));
  EXPECT_EQ(finite_min_eccentricities(test::directed_path(3)), std::vector<bool>(3, true));
  EXPECT_EQ(finite_min_eccentricities(Graph(2, {}, false)), std::vector<bool>(2, false));
}

TEST(FiniteMinEccentricities, ExhaustiveUpToFour) {
  for (std::size_t n = 1; n <= 4; ++n) {
    test::for_each_digraph(n, [&](const Graph& g) {
      auto want = test::brute_eccentricities(g, Variant::kMin).ecc;
      auto got = finite_min_eccentricities(g);
      for (Vertex v = 0; v < n; ++v) ASSERT_EQ(got[v], want[v] != test::kInf);
    });
  }
}

TEST(ApproximateCenter, PathExamples) {
  auto found = approximate_center(test::directed_path(3), Distance(1));
  ASSERT_TRUE(found.has_value());
  EXPECT_LE(eccentricity_of(test::directed_path(3), Variant::kMin, *found), Distance(3));
  EXPECT_FALSE(approximate_center(test::directed_path(10), Distance(0)).has_value());
}

TEST(ApproximateCenter, ContractExhaustiveUpToFive) {
  for (std::size_t n = 1; n <= 5; ++n) {
    test::for_each_dag(n, [&](const Graph& g) {
      auto ecc = test::brute_eccentricities(g, Variant::kMin);
      for (std::uint64_t r = 0; r <= n; ++r) {
        auto found = approximate_center(g, Distance(r));
        if (found) {
          ASSERT_LE(ecc.ecc[*found], 3 * r);
        } else {
          ASSERT_GT(ecc.radius, r);
        }
      }
    });
  }
}

TEST(ApproximateCenter, ContractOnRandomDags) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng gen(seed);
    Graph g = random_dag({100, 250, 1, true}, gen);
    auto ecc = test::brute_eccentricities(g, Variant::kMin);
    for (std::uint64_t r = 0; r <= ecc.diameter; ++r) {
      auto found = approximate_center(g, Distance(r));
      if (found) {
        EXPECT_LE(ecc.ecc[*found], 3 * r);
      } else {
        EXPECT_GT(ecc.radius, r);
      }
    }
  }
}

TEST(ApproxMinRadiusDag, TrivialCases) {
  EXPECT_EQ(approx_min_radius_dag(Graph(1, {}, false)).estimate, Distance(0));
  EXPECT_EQ(approx_min_radius_dag(Graph(2, {}, false)).estimate, kInfinity);
}

TEST(ApproxMinRadiusDag, WithinThree) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng gen(seed);
    Graph g = random_dag({60, 150, seed % 2 ? 1u : 3u, true}, gen);
    std::uint64_t radius = min_radius(g);
    auto r = approx_min_radius_dag(g);
    ASSERT_TRUE(r.witness_center.has_value());
    EXPECT_EQ(r.estimate, eccentricity_of(g, Variant::kMin, *r.witness_center));
    EXPECT_GE(r.estimate, Distance(radius));
    EXPECT_LE(r.estimate, Distance(3 * radius));
  }
}

TEST(TrivialMetricEstimate, PathProbes) {
  Graph g = test::undirected_path(3);
  EXPECT_EQ(trivial_metric_estimate(g, Variant::kUndirected, 1).estimate, Distance(1));
  EXPECT_EQ(trivial_metric_estimate(g, Variant::kUndirected, 0).estimate, Distance(2));
  EXPECT_THROW(trivial_metric_estimate(g, Variant::kMin, 0), InputError);
  EXPECT_THROW(trivial_metric_estimate(g, Variant::kSource, 0), InputError);
}

TEST(TrivialMetricEstimate, WithinTwoForEveryProbe) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng gen(seed);
    Graph g = random_undirected({20, 30, 1 + static_cast<Weight>(seed % 3), true}, gen);
    auto r = exact_eccentricities(g, Variant::kUndirected);
    for (Vertex p = 0; p < g.num_vertices(); ++p) {
      Distance e = trivial_metric_estimate(g, Variant::kUndirected, p).estimate;
      EXPECT_GE(e, r.radius);
      EXPECT_LE(e, r.radius + r.radius);
      EXPECT_LE(e, r.diameter);
      EXPECT_GE(e + e, r.diameter);
    }
  }
}

}  // namespace
}  // namespace ecclab
