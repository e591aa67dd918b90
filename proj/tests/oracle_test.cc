// Copyright 2026 The cfcolor Authors
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

#include "cfc/oracle.h"

#include <chrono>

#include "brute_force.h"
#include "cfc/error.h"
#include "cfc/generators.h"
#include "gtest/gtest.h"

namespace cfc {
namespace {

int Chromatic(const Graph& g, Variant variant) {
  const OracleResult r = ExactCf(g, variant);
  EXPECT_TRUE(r.chromatic.has_value());
  EXPECT_TRUE(r.witness.has_value());
  EXPECT_TRUE(Verify(g, *r.witness, variant).valid);
  EXPECT_EQ(r.witness->NumColors(), *r.chromatic);
  return r.chromatic.value_or(-1);
}

Graph Star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, edges);
}

// Values below were computed by exhaustive k^n enumeration
// (testing::NaiveChromatic) and are frozen here.
struct Known {
  const char* name;
  Graph graph;
  int closed;
  int open;
};

std::vector<Known> KnownGraphs() {
  return {
      {"K2", CompleteGraph(2), 2, 1},  {"K3", CompleteGraph(3), 2, 3},
      {"P3", PathGraph(3), 2, 2},      {"C4", CycleGraph(4), 2, 2},
      {"P4", PathGraph(4), 2, 2},      {"C5", CycleGraph(5), 2, 3},
      {"K4", CompleteGraph(4), 2, 2},  {"K11", CompleteGraph(11), 2, 3},
      {"K1,3", Star(3), 2, 2},         {"K1,5", Star(5), 2, 2},
  };
}

TEST(OracleTest, FrozenSmallValues) {
  for (const Known& k : KnownGraphs()) {
    SCOPED_TRACE(k.name);
    EXPECT_EQ(Chromatic(k.graph, Variant::kClosed), k.closed);
    EXPECT_EQ(Chromatic(k.graph, Variant::kOpen), k.open);
  }
}

TEST(OracleTest, FrozenValuesMatchNaiveEnumeration) {
  for (const Known& k : KnownGraphs()) {
    if (k.graph.num_vertices() > 6) continue;
    SCOPED_TRACE(k.name);
    EXPECT_EQ(testing::NaiveChromatic(k.graph, true), k.closed);
    EXPECT_EQ(testing::NaiveChromatic(k.graph, false), k.open);
  }
}

TEST(OracleTest, SanityCasesRunFast) {
  const auto start = std::chrono::steady_clock::now();
  for (const Graph& g : {CompleteGraph(2), PathGraph(3), CompleteGraph(3), CycleGraph(4)}) {
    ExactCf(g, Variant::kClosed);
    ExactCf(g, Variant::kOpen);
  }
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(1));
}

TEST(OracleTest, AgreesWithNaiveOnAllConnectedGraphsUpToFive) {
  for (const Graph& g : EnumerateSmall(5)) {
    for (bool closed : {true, false}) {
      const OracleResult r = ExactCf(g, closed ? Variant::kClosed : Variant::kOpen);
      EXPECT_EQ(r.chromatic, testing::NaiveChromatic(g, closed)) << WriteGraph(g);
    }
  }
}

TEST(OracleTest, AgreesWithNaiveOnRandomGraphs) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    GenSpec spec;
    spec.n = 2 + static_cast<int>(seed % 6);
    spec.seed = seed;
    spec.edge_probability = 0.4;
    const Graph g = Generate(spec).graph;
    for (bool closed : {true, false}) {
      const OracleResult r = ExactCf(g, closed ? Variant::kClosed : Variant::kOpen);
      EXPECT_EQ(r.chromatic, testing::NaiveChromatic(g, closed)) << WriteGraph(g);
    }
  }
}

TEST(OracleTest, OpenInfeasibleWithIsolatedVertex) {
  const Graph g(3, {{0, 1}});
  EXPECT_TRUE(ExactCf(g, Variant::kOpen).infeasible);
  EXPECT_EQ(DecideCf(g, Variant::kOpen, 3), std::nullopt);
  EXPECT_EQ(*ExactCf(g, Variant::kClosed).chromatic, 2);
}

TEST(OracleTest, EmptyGraph) {
  EXPECT_EQ(ExactCf(Graph(0), Variant::kClosed).chromatic, 0);
  EXPECT_EQ(*ExactCf(Graph(3), Variant::kClosed).chromatic, 1);
}

TEST(OracleTest, DecideRespectsK) {
  const Graph k3 = CompleteGraph(3);
  EXPECT_EQ(DecideCf(k3, Variant::kOpen, 2), std::nullopt);
  const auto c = DecideCf(k3, Variant::kOpen, 3);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(VerifyCfon(k3, *c).valid);
  EXPECT_THROW(DecideCf(k3, Variant::kOpen, 0), InvalidArgument);
}

TEST(OracleTest, SizeGuard) {
  OracleOptions options;
  options.vertex_limit = 4;
  EXPECT_THROW(ExactCf(PathGraph(5), Variant::kClosed, options), SizeGuardError);
  EXPECT_NO_THROW(ExactCf(PathGraph(4), Variant::kClosed, options));
}

TEST(OracleTest, MaxKCapsTheSearch) {
  OracleOptions options;
  options.max_k = 2;
  const OracleResult r = ExactCf(CompleteGraph(3), Variant::kOpen, options);
  EXPECT_FALSE(r.infeasible);
  EXPECT_EQ(r.chromatic, std::nullopt);
}

TEST(FindConflictFreeColoringTest, CustomOrderAndEmptyEdge) {
  const std::vector<VertexSet> edges = {{0, 1}, {1, 2}};
  const std::vector<Vertex> order = {2, 1, 0};
  EXPECT_EQ(FindConflictFreeColoring(3, edges, 1, order), std::nullopt);
  const auto c = FindConflictFreeColoring(3, edges, 2, order);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(UniqueColor(*c, edges[0]) && UniqueColor(*c, edges[1]));
  const std::vector<VertexSet> with_empty = {{0}, {}};
  EXPECT_EQ(FindConflictFreeColoring(1, with_empty, 3), std::nullopt);
}

}  // namespace
}  // namespace cfc
