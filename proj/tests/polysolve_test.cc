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

#include "cfc/polysolve.h"

#include "brute_force.h"
#include "cfc/error.h"
#include "cfc/generators.h"
#include "cfc/oracle.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace cfc {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::IsEmpty;

int Optimum(const Graph& g, Variant variant) { return *ExactCf(g, variant).chromatic; }

Graph Star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, edges);
}

TEST(BipartiteTest, Examples) {
  const SolveOutcome k2 = SolveBipartiteCfcn(CompleteGraph(2), {{0}, {1}});
  EXPECT_THAT(Vec(k2.coloring.colors()), ElementsAre(0, 1));
  EXPECT_EQ(k2.colors_used, 2);
  EXPECT_EQ(k2.optimality, Optimality::kExact);
  EXPECT_THAT(Vec(SolveBipartiteCfcn(PathGraph(3), {{0, 2}, {1}}).coloring.colors()),
              ElementsAre(0, 1, 0));
  EXPECT_THAT(Vec(SolveBipartiteCfcn(CycleGraph(4), {{0, 2}, {1, 3}}).coloring.colors()),
              ElementsAre(0, 1, 0, 1));
}

TEST(BipartiteTest, Errors) {
  EXPECT_THROW(SolveBipartiteCfcn(PathGraph(3), {{0, 1}, {2}}), InvalidArgument);
  EXPECT_THROW(SolveBipartiteCfcn(Graph(2), {{0}, {1}}), InvalidArgument);
}

TEST(SplitTest, UniversalVertex) {
  const SolveOutcome out = SolveSplitCfcn(Star(3), {{0}, {1, 2, 3}});
  EXPECT_THAT(Vec(out.coloring.colors()), ElementsAre(1, 0, 0, 0));
  EXPECT_EQ(out.optimality, Optimality::kExact);
}

TEST(SplitTest, OnePrivateNeighborEachGivesTwoColors) {
  const SolveOutcome out = SolveSplitCfcn(PathGraph(4), {{1, 2}, {0, 3}});
  EXPECT_THAT(Vec(out.coloring.colors()), ElementsAre(1, 0, 0, 1));
  EXPECT_EQ(out.colors_used, 2);
}

TEST(SplitTest, TwoVertexCliqueWithSharedNeighbors) {
  // C = {0, 1}, I = {2, 3, 4}; 0 has two independent neighbors and no vertex
  // is universal, yet exhaustive search finds a 2-coloring.
  const Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}});
  EXPECT_EQ(Optimum(g, Variant::kClosed), 2);
  const SolveOutcome out = SolveSplitCfcn(g, {{0, 1}, {2, 3, 4}});
  EXPECT_TRUE(VerifyCfcn(g, out.coloring).valid);
  EXPECT_EQ(out.colors_used, 2);
}

TEST(SplitTest, ThreeColorsWhenNeeded) {
  // Clique {0,1,2}; 0 sees 3 and 4, 1 sees 5 and 6, 2 sees 7 and 8.
  const Graph g(9, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {2, 7}, {2, 8}});
  EXPECT_EQ(Optimum(g, Variant::kClosed), 3);
  const SolveOutcome out = SolveSplitCfcn(g, {{0, 1, 2}, {3, 4, 5, 6, 7, 8}});
  EXPECT_EQ(out.colors_used, 3);
  EXPECT_TRUE(VerifyCfcn(g, out.coloring).valid);
}

TEST(SplitTest, AllConnectedSplitGraphsUpToSevenMatchOracle) {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : EnumerateSplit(n)) {
      const SolveOutcome out = SolveSplitCfcn(g, *RecognizeSplit(g));
      EXPECT_TRUE(VerifyCfcn(g, out.coloring).valid) << WriteGraph(g);
      EXPECT_EQ(out.colors_used, Optimum(g, Variant::kClosed)) << WriteGraph(g);
      EXPECT_GE(out.colors_used, 2);
      EXPECT_LE(out.colors_used, 3);
    }
  }
}

TEST(SplitTest, Errors) {
  EXPECT_THROW(SolveSplitCfcn(PathGraph(4), {{0, 1}, {2, 3}}), InvalidArgument);
  EXPECT_THROW(SolveSplitCfcn(Graph(2), {{0}, {1}}), InvalidArgument);
}

TEST(CographTest, Examples) {
  const Graph p3 = PathGraph(3);
  const SolveOutcome closed = SolveCograph(p3, ModularDecomposition(p3), Variant::kClosed);
  EXPECT_THAT(Vec(closed.coloring.colors()), ElementsAre(0, 1, 0));
  EXPECT_EQ(closed.optimality, Optimality::kExact);

  const Graph c4 = CycleGraph(4);
  const SolveOutcome c4_out = SolveCograph(c4, ModularDecomposition(c4), Variant::kClosed);
  EXPECT_THAT(Vec(c4_out.coloring.colors()), ElementsAre(0, 1, 2, 2));
  EXPECT_EQ(c4_out.optimality, Optimality::kUpperBound);
  EXPECT_TRUE(VerifyCfcn(c4, c4_out.coloring).valid);
  EXPECT_EQ(Optimum(c4, Variant::kClosed), 2);

  const SolveOutcome open = SolveCograph(p3, ModularDecomposition(p3), Variant::kOpen);
  EXPECT_EQ(open.colors_used, 3);
  EXPECT_TRUE(VerifyCfon(p3, open.coloring).valid);
  EXPECT_EQ(Optimum(p3, Variant::kOpen), 2);

  const Graph k2 = CompleteGraph(2);
  EXPECT_THAT(Vec(SolveCograph(k2, ModularDecomposition(k2), Variant::kOpen).coloring.colors()),
              ElementsAre(0, 1));
}

TEST(CographTest, ValidWithinThreeOnAllConnectedCographsUpToSix) {
  const auto cographs = EnumerateConnected(6, [](const Graph& g) {
    return !ModularDecomposition(g).HasPrimeNode();
  });
  for (const Graph& g : cographs) {
    const ModularDecompositionTree tree = ModularDecomposition(g);
    for (Variant v : {Variant::kClosed, Variant::kOpen}) {
      const SolveOutcome out = SolveCograph(g, tree, v);
      EXPECT_TRUE(Verify(g, out.coloring, v).valid) << WriteGraph(g);
      EXPECT_LE(out.colors_used, 3);
      EXPECT_GE(out.colors_used, Optimum(g, v));
    }
    if (!UniversalVertices(g).empty()) {
      EXPECT_EQ(SolveCograph(g, tree, Variant::kClosed).colors_used, 2);
    }
  }
}

TEST(CographTest, Errors) {
  const Graph p4 = PathGraph(4);
  EXPECT_THROW(SolveCograph(p4, ModularDecomposition(p4), Variant::kClosed), InvalidArgument);
  const Graph two(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(SolveCograph(two, ModularDecomposition(two), Variant::kClosed), InvalidArgument);
}

TEST(Lemma1Test, ClosedExamples) {
  const Modulator none{{}, ResidualClass::kCluster};
  EXPECT_THAT(Vec(Lemma1Cfcn(CompleteGraph(3), none).coloring.colors()), ElementsAre(0, 1, 1));
  const SolveOutcome star = Lemma1Cfcn(Star(3), {{0}, ResidualClass::kCluster});
  EXPECT_THAT(Vec(star.coloring.colors()), ElementsAre(2, 0, 0, 0));
  EXPECT_EQ(star.colors_used, 2);
  EXPECT_TRUE(VerifyCfcn(Star(3), star.coloring).valid);
}

TEST(Lemma1Test, OpenExamples) {
  // X = {2}; the clique {0, 1} sees x.
  const Graph g = CompleteGraph(3);
  const SolveOutcome out = Lemma1Cfon(g, {{2}, ResidualClass::kCluster});
  EXPECT_THAT(Vec(out.coloring.colors()), ElementsAre(2, 0, 1));
  EXPECT_TRUE(VerifyCfon(g, out.coloring).valid);

  const SolveOutcome star = Lemma1Cfon(Star(3), {{0}, ResidualClass::kCluster});
  EXPECT_THAT(Vec(star.coloring.colors()), ElementsAre(1, 2, 3, 3));
  EXPECT_TRUE(VerifyCfon(Star(3), star.coloring).valid);
  EXPECT_LE(star.colors_used, 4);
}

TEST(Lemma1Test, IsolatedCliqueCornerIsFlagged) {
  const SolveOutcome out = Lemma1Cfon(CompleteGraph(3), {{}, ResidualClass::kCluster});
  EXPECT_TRUE(VerifyCfon(CompleteGraph(3), out.coloring).valid);
  EXPECT_EQ(out.colors_used, 3);
  EXPECT_THAT(out.note, HasSubstr("d = 0"));
  const SolveOutcome k2 = Lemma1Cfon(CompleteGraph(2), {{}, ResidualClass::kCluster});
  EXPECT_EQ(k2.colors_used, 2);
  EXPECT_THAT(k2.note, IsEmpty());
}

TEST(Lemma1Test, Errors) {
  EXPECT_THROW(Lemma1Cfcn(PathGraph(3), {{}, ResidualClass::kCluster}), InvalidArgument);
  EXPECT_THROW(Lemma1Cfon(Graph(3, {{0, 1}}), {{}, ResidualClass::kCluster}), InvalidArgument);
}

TEST(Lemma1Test, BoundsOnRandomModulatorInstances) {
  for (uint64_t seed = 0; seed < 150; ++seed) {
    GenSpec spec;
    spec.cls = GenClass::kClusterModulator;
    spec.d = static_cast<int>(seed % 4);
    spec.n = spec.d + 2 + static_cast<int>(seed % 9);
    spec.seed = seed;
    const Generated gen = Generate(spec);
    const Graph& g = gen.graph;
    const int d = gen.modulator->size();
    const SolveOutcome cn = Lemma1Cfcn(g, *gen.modulator);
    EXPECT_TRUE(VerifyCfcn(g, cn.coloring).valid);
    EXPECT_LE(cn.colors_used, d + 2);
    bool isolated = false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) isolated |= g.Degree(v) == 0;
    if (isolated) continue;
    const SolveOutcome on = Lemma1Cfon(g, *gen.modulator);
    EXPECT_TRUE(VerifyCfon(g, on.coloring).valid) << WriteGraph(g);
    if (on.note.empty()) {
      EXPECT_LE(on.colors_used, 2 * d + 2);
    } else {
      EXPECT_EQ(d, 0);
      EXPECT_LE(on.colors_used, 3);
    }
  }
}

TEST(OptimalityTest, Names) {
  EXPECT_EQ(OptimalityName(Optimality::kExact), "exact");
  EXPECT_EQ(OptimalityName(Optimality::kUpperBound), "upper-bound-only");
}

}  // namespace
}  // namespace cfc
