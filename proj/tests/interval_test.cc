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

#include "cfc/interval.h"

#include <algorithm>
#include <numeric>

#include "cfc/error.h"
#include "cfc/generators.h"
#include "cfc/oracle.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace cfc {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

IntervalRepresentation Rep(std::initializer_list<std::pair<int, int>> pairs) {
  IntervalRepresentation rep;
  for (const auto& [l, r] : pairs) rep.push_back({l, r});
  return rep;
}

// Interval i is [2i, 2i + 5/2]: consecutive intervals overlap, others do not.
IntervalRepresentation Staircase(int n) {
  IntervalRepresentation rep;
  for (int i = 0; i < n; ++i) rep.push_back({2 * i, Rational(4 * i + 5, 2)});
  return rep;
}

TEST(RationalTest, ParseAndOrder) {
  EXPECT_EQ(Rational::Parse("7/2"), Rational(7, 2));
  EXPECT_EQ(Rational::Parse("14/4"), Rational(7, 2));
  EXPECT_EQ(Rational::Parse("-3"), Rational(-3));
  EXPECT_EQ(Rational(6, -4).ToString(), "-3/2");
  EXPECT_EQ(Rational(4, 2).ToString(), "2");
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_THROW(Rational::Parse("1/0"), InvalidArgument);
  EXPECT_THROW(Rational::Parse("x"), InvalidArgument);
  EXPECT_THROW(Rational::Parse("1.5"), InvalidArgument);
}

TEST(RepresentationTest, Validation) {
  EXPECT_TRUE(ValidateRepresentation(PathGraph(2), Rep({{0, 2}, {1, 3}})).valid);
  const RepresentationVerdict disjoint =
      ValidateRepresentation(PathGraph(2), Rep({{0, 1}, {2, 3}}));
  EXPECT_FALSE(disjoint.valid);
  ASSERT_TRUE(disjoint.mismatch.has_value());
  EXPECT_EQ(*disjoint.mismatch, (Edge{0, 1}));
  EXPECT_FALSE(ValidateRepresentation(PathGraph(2), Rep({{0, 2}, {2, 3}})).valid);
  EXPECT_FALSE(ValidateRepresentation(PathGraph(2), Rep({{0, 2}})).valid);
  EXPECT_FALSE(ValidateRepresentation(Graph(1), Rep({{1, 1}})).valid);
}

TEST(RepresentationTest, ParseWriteRoundTrip) {
  const IntervalRepresentation rep = ParseIntervals("c comment\ni 1 1 7/2\ni 0 0 2\n", 2);
  EXPECT_EQ(rep[0].right, Rational(2));
  EXPECT_EQ(rep[1].right, Rational(7, 2));
  const IntervalRepresentation again = ParseIntervals(WriteIntervals(rep), 2);
  EXPECT_EQ(again[1].right, rep[1].right);
  EXPECT_EQ(again[0].left, rep[0].left);
  EXPECT_THROW(ParseIntervals("i 0 0 1\n", 2), ParseError);
  EXPECT_THROW(ParseIntervals("i 0 0 1\ni 0 2 3\n", 2), ParseError);
  EXPECT_THROW(ParseIntervals("i 2 0 1\n", 2), ParseError);
  EXPECT_THROW(ParseIntervals("i 0 zero 1\n", 1), ParseError);
}

TEST(RepresentationTest, IntervalGraph) {
  EXPECT_EQ(IntervalGraph(Staircase(5)), PathGraph(5));
}

TEST(CfcnIntervalTest, Examples) {
  const Graph p4 = PathGraph(4);
  const SolveOutcome out = CfcnInterval(p4, Rep({{0, 2}, {1, 4}, {3, 6}, {5, 7}}));
  EXPECT_TRUE(VerifyCfcn(p4, out.coloring).valid);
  EXPECT_LE(out.colors_used, 4);

  const SolveOutcome k2 = CfcnInterval(PathGraph(2), Rep({{0, 2}, {1, 3}}));
  EXPECT_TRUE(VerifyCfcn(PathGraph(2), k2.coloring).valid);
  EXPECT_EQ(k2.optimality, Optimality::kUpperBound);
}

TEST(CfonIntervalTest, Examples) {
  const Graph p3 = PathGraph(3);
  const SolveOutcome out = CfonInterval(p3, Rep({{0, 2}, {1, 5}, {3, 4}}));
  EXPECT_TRUE(VerifyCfon(p3, out.coloring).valid);
  EXPECT_LE(out.colors_used, 4);
}

TEST(IntervalTest, Errors) {
  EXPECT_THROW(CfcnInterval(PathGraph(2), Rep({{0, 1}, {2, 3}})), InvalidArgument);
  EXPECT_THROW(CfcnInterval(Graph(2), Rep({{0, 1}, {2, 3}})), InvalidArgument);
  EXPECT_THROW(CfonInterval(PathGraph(2), Rep({{0, 2}, {1, 3}})), InvalidArgument);
  try {
    CfcnInterval(PathGraph(2), Rep({{0, 2}, {2, 3}}));
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_THAT(e.what(), HasSubstr("invalid interval representation"));
  }
}

TEST(IntervalTest, LongStaircases) {
  for (int n = 3; n <= 50; ++n) {
    const IntervalRepresentation rep = Staircase(n);
    const Graph g = PathGraph(n);
    ASSERT_TRUE(ValidateRepresentation(g, rep).valid) << n;
    const SolveOutcome cn = CfcnInterval(g, rep);
    EXPECT_TRUE(VerifyCfcn(g, cn.coloring).valid) << n;
    EXPECT_LE(cn.colors_used, 4);
    const SolveOutcome on = CfonInterval(g, rep);
    EXPECT_TRUE(VerifyCfon(g, on.coloring).valid) << n;
    EXPECT_LE(on.colors_used, 4);
  }
}

TEST(IntervalTest, RandomInstancesAgainstOracle) {
  for (uint64_t seed = 0; seed < 400; ++seed) {
    GenSpec spec;
    spec.cls = GenClass::kInterval;
    spec.n = 2 + static_cast<int>(seed % 11);
    spec.seed = seed;
    const Generated gen = Generate(spec);
    const Graph& g = gen.graph;
    ASSERT_TRUE(gen.intervals.has_value());
    ASSERT_TRUE(ValidateRepresentation(g, *gen.intervals).valid);
    const SolveOutcome cn = CfcnInterval(g, *gen.intervals);
    ASSERT_TRUE(VerifyCfcn(g, cn.coloring).valid) << WriteGraph(g);
    EXPECT_LE(cn.colors_used, 4);
    EXPECT_GE(cn.colors_used, *ExactCf(g, Variant::kClosed).chromatic);
    // Adjacent vertices never share a nonzero color in the sweep chain.
    for (const Edge& e : g.Edges()) {
      if (cn.coloring[e.u] != 0) EXPECT_NE(cn.coloring[e.u], cn.coloring[e.v]);
    }
    if (g.num_edges() < 2) continue;
    const SolveOutcome on = CfonInterval(g, *gen.intervals);
    ASSERT_TRUE(VerifyCfon(g, on.coloring).valid) << WriteGraph(g);
    EXPECT_LE(on.colors_used, 4);
  }
}

TEST(IntervalTest, RelabelingKeepsValidity) {
  const IntervalRepresentation rep = Rep({{0, 3}, {1, 5}, {2, 8}, {4, 6}, {7, 10}, {9, 11}});
  const Graph g = IntervalGraph(rep);
  std::vector<int> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    IntervalRepresentation moved(6);
    for (int v = 0; v < 6; ++v) moved[perm[v]] = rep[v];
    const Graph h = IntervalGraph(moved);
    EXPECT_TRUE(VerifyCfcn(h, CfcnInterval(h, moved).coloring).valid);
    EXPECT_TRUE(VerifyCfon(h, CfonInterval(h, moved).coloring).valid);
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(g.num_vertices(), 6);
}

}  // namespace
}  // namespace cfc
