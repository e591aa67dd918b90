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

#include "cfc/generators.h"

#include <set>

#include "cfc/error.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace cfc {
namespace {

using ::testing::ElementsAre;

std::vector<int> CountBySize(const std::vector<Graph>& graphs, int max_n) {
  std::vector<int> counts(max_n + 1, 0);
  for (const Graph& g : graphs) ++counts[g.num_vertices()];
  return counts;
}

TEST(RngTest, DeterministicAndBounded) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.Next(), b.Next());
  // First splitmix64 output for seed 0.
  EXPECT_EQ(Rng(0).Next(), 0xe220a8397b1dcdafULL);
  Rng r(7);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(r.Below(13), 13u);
    const int v = r.Between(-2, 2);
    EXPECT_GE(v, -2);
    EXPECT_LE(v, 2);
  }
  EXPECT_FALSE(r.Chance(0.0));
  EXPECT_TRUE(r.Chance(1.0));
}

TEST(GenClassTest, NamesRoundTrip) {
  for (GenClass c : {GenClass::kRandom, GenClass::kCluster, GenClass::kClusterModulator,
                     GenClass::kSplit, GenClass::kThreshold, GenClass::kThresholdModulator,
                     GenClass::kCograph, GenClass::kBipartite, GenClass::kInterval}) {
    EXPECT_EQ(ParseGenClass(GenClassName(c)), c);
  }
  EXPECT_FALSE(ParseGenClass("planar").has_value());
}

TEST(GenerateTest, SameSpecSameGraph) {
  GenSpec spec;
  spec.cls = GenClass::kRandom;
  spec.n = 12;
  spec.seed = 9;
  EXPECT_EQ(Generate(spec).graph, Generate(spec).graph);
  GenSpec other = spec;
  other.seed = 10;
  EXPECT_NE(WriteGraph(Generate(spec).graph), WriteGraph(Generate(other).graph));
}

TEST(GenerateTest, CertificatesHold) {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 2 + static_cast<int>(seed % 12);
    GenSpec spec;
    spec.n = n;
    spec.seed = seed;

    spec.cls = GenClass::kSplit;
    Generated gen = Generate(spec);
    ASSERT_TRUE(gen.split.has_value());
    EXPECT_TRUE(IsValidSplitPartition(gen.graph, *gen.split));
    EXPECT_EQ(gen.graph.num_vertices(), n);

    spec.cls = GenClass::kThreshold;
    gen = Generate(spec);
    ASSERT_TRUE(gen.threshold.has_value());
    EXPECT_TRUE(ThresholdOrderRebuilds(gen.graph, *gen.threshold));

    spec.cls = GenClass::kBipartite;
    gen = Generate(spec);
    ASSERT_TRUE(gen.bipartition.has_value());
    EXPECT_TRUE(IsValidBipartition(gen.graph, *gen.bipartition));

    spec.cls = GenClass::kInterval;
    gen = Generate(spec);
    ASSERT_TRUE(gen.intervals.has_value());
    EXPECT_TRUE(ValidateRepresentation(gen.graph, *gen.intervals).valid);
    EXPECT_TRUE(IsConnected(gen.graph));

    spec.cls = GenClass::kCograph;
    gen = Generate(spec);
    EXPECT_FALSE(ModularDecomposition(gen.graph).HasPrimeNode());

    spec.cls = GenClass::kCluster;
    gen = Generate(spec);
    EXPECT_TRUE(RecognizeCluster(gen.graph).has_value());

    spec.cls = GenClass::kClusterModulator;
    spec.d = static_cast<int>(seed % 3);
    spec.n = n + spec.d;
    gen = Generate(spec);
    ASSERT_TRUE(gen.modulator.has_value());
    EXPECT_EQ(gen.modulator->size(), spec.d);
    EXPECT_TRUE(IsValidModulator(gen.graph, *gen.modulator));

    spec.cls = GenClass::kThresholdModulator;
    gen = Generate(spec);
    ASSERT_TRUE(gen.modulator.has_value());
    EXPECT_EQ(gen.modulator->residual_class, ResidualClass::kThreshold);
    EXPECT_TRUE(IsValidModulator(gen.graph, *gen.modulator));
    spec.d = 0;
  }
}

TEST(GenerateTest, ExplicitCliqueSizes) {
  GenSpec spec;
  spec.cls = GenClass::kClusterModulator;
  spec.d = 2;
  spec.clique_sizes = {3, 2, 1};
  spec.seed = 4;
  const Generated gen = Generate(spec);
  EXPECT_EQ(gen.graph.num_vertices(), 8);
  const InducedSubgraph rest = Residual(gen.graph, *gen.modulator);
  std::multiset<size_t> sizes;
  const auto cliques = RecognizeCluster(rest.graph);
  ASSERT_TRUE(cliques.has_value());
  for (const VertexSet& c : *cliques) sizes.insert(c.size());
  EXPECT_THAT(sizes, ElementsAre(1, 2, 3));
}

TEST(GenerateTest, ConnectedIsHonored) {
  for (GenClass c : {GenClass::kRandom, GenClass::kSplit, GenClass::kThreshold,
                     GenClass::kCograph, GenClass::kBipartite}) {
    for (uint64_t seed = 0; seed < 20; ++seed) {
      GenSpec spec;
      spec.cls = c;
      spec.n = 8;
      spec.seed = seed;
      spec.connected = true;
      EXPECT_TRUE(IsConnected(Generate(spec).graph)) << GenClassName(c);
    }
  }
}

TEST(GenerateTest, RejectsContradictoryKnobs) {
  GenSpec spec;
  spec.cls = GenClass::kRandom;
  spec.n = 5;
  spec.d = 1;
  EXPECT_THROW(Generate(spec), InvalidArgument);
  spec.d = 0;
  spec.clique_sizes = {2};
  EXPECT_THROW(Generate(spec), InvalidArgument);
  spec.clique_sizes.clear();
  spec.edge_probability = 1.5;
  EXPECT_THROW(Generate(spec), InvalidArgument);
  spec.edge_probability = 0.5;
  spec.cls = GenClass::kClusterModulator;
  spec.d = 21;
  spec.n = 30;
  EXPECT_THROW(Generate(spec), InvalidArgument);
  spec.d = 6;
  spec.n = 5;
  EXPECT_THROW(Generate(spec), InvalidArgument);
}

TEST(CanonicalFormTest, InvariantUnderRelabeling) {
  // P4 labeled two ways.
  const Graph a = PathGraph(4);
  const Graph b(4, {{2, 0}, {0, 3}, {3, 1}});
  EXPECT_EQ(CanonicalForm(a), CanonicalForm(b));
  EXPECT_NE(CanonicalForm(a), CanonicalForm(Graph(4, {{0, 1}, {0, 2}, {0, 3}})));
  EXPECT_NE(CanonicalForm(CycleGraph(6)),
            CanonicalForm(Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST(EnumerateTest, ConnectedGraphCounts) {
  // Connected graphs up to isomorphism: 1, 2, 6, 21, 112, 853 for n = 2..7.
  EXPECT_THAT(CountBySize(EnumerateSmall(7), 7), ElementsAre(0, 0, 1, 2, 6, 21, 112, 853));
  EXPECT_THROW(EnumerateSmall(8), InvalidArgument);
}

TEST(EnumerateTest, FilteredCounts) {
  // Connected threshold graphs: 2^(n-2). Connected cographs: 1, 2, 5, 12, 33.
  const auto threshold = EnumerateSmall(6, [](const Graph& g) {
    return RecognizeThreshold(g).has_value();
  });
  EXPECT_THAT(CountBySize(threshold, 6), ElementsAre(0, 0, 1, 2, 4, 8, 16));
  const auto cographs = EnumerateSmall(6, [](const Graph& g) {
    return !ModularDecomposition(g).HasPrimeNode();
  });
  EXPECT_THAT(CountBySize(cographs, 6), ElementsAre(0, 0, 1, 2, 5, 12, 33));
}

TEST(EnumerateTest, SplitEnumerationMatchesFilter) {
  const auto filtered = EnumerateSmall(7, [](const Graph& g) {
    return RecognizeSplit(g).has_value();
  });
  const std::vector<int> expected = CountBySize(filtered, 7);
  for (int n = 2; n <= 7; ++n) {
    const std::vector<Graph> direct = EnumerateSplit(n);
    EXPECT_EQ(static_cast<int>(direct.size()), expected[n]) << n;
    std::set<std::vector<bool>> forms;
    for (const Graph& g : direct) {
      EXPECT_TRUE(IsConnected(g));
      EXPECT_TRUE(RecognizeSplit(g).has_value());
      forms.insert(CanonicalForm(g));
    }
    EXPECT_EQ(forms.size(), direct.size());
  }
}

}  // namespace
}  // namespace cfc
