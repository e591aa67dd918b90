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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cfc/coloring.h"
#include "cfc/graph.h"
#include "cfc/oracle.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace cfc::cli {
namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cfc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::string Put(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name)) << text;
    return Path(name);
  }

  static std::string Slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  int Call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::Run(args, out_, err_);
  }

  std::string out() const { return out_.str(); }
  std::string err() const { return err_.str(); }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, VerifyValidAndInvalid) {
  const std::string g = Put("p3.graph", WriteGraph(PathGraph(3)));
  const std::string good = Put("good.col", "v 0 0\nv 1 1\nv 2 0\n");
  const std::string bad = Put("bad.col", "v 0 0\nv 1 0\nv 2 0\n");
  EXPECT_EQ(Call({"verify", "--variant", "cn", g, good}), kOk);
  EXPECT_THAT(out(), StartsWith("command: cfc verify"));
  EXPECT_THAT(out(), HasSubstr("valid: yes\n"));
  EXPECT_THAT(out(), HasSubstr("graph_digest: fnv1a64:"));
  EXPECT_THAT(out(), HasSubstr("exit_code: 0\n"));
  EXPECT_EQ(Call({"verify", "--variant", "cn", g, bad}), kNo);
  EXPECT_THAT(out(), HasSubstr("valid: no\n"));
  EXPECT_THAT(out(), HasSubstr("failing_vertex: 0\n"));
  EXPECT_EQ(Call({"verify", "--variant", "on", g, good}), kNo);
}

TEST_F(CliTest, UsageAndFileErrors) {
  EXPECT_EQ(Call({}), kUsage);
  EXPECT_EQ(Call({"verify", "--variant", "xx", "a", "b"}), kUsage);
  EXPECT_EQ(Call({"oracle", "--variant", "cn", Path("missing.graph")}), kUsage);
  EXPECT_THAT(err(), HasSubstr("cannot read"));
  const std::string broken = Put("broken.graph", "p cf 2 1\ne 0 5\n");
  EXPECT_EQ(Call({"oracle", "--variant", "cn", broken}), kUsage);
  EXPECT_THAT(err(), HasSubstr("parse error"));
  EXPECT_EQ(Call({"--help"}), kOk);
  EXPECT_EQ(Call({"--version"}), kOk);
  EXPECT_THAT(out(), HasSubstr("cfc 0.1.0"));
}

TEST_F(CliTest, OracleChromaticAndDecision) {
  // Split graph: triangle {0,1,2}, each with two private pendant vertices.
  const Graph split(9, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {2, 7}, {2, 8}});
  ASSERT_EQ(*ExactCf(split, Variant::kClosed).chromatic, 3);
  const std::string g = Put("split.graph", WriteGraph(split));
  EXPECT_EQ(Call({"oracle", "--variant", "cn", g, "-o", Path("w.col")}), kOk);
  EXPECT_THAT(out(), HasSubstr("chromatic: 3\n"));
  const Coloring w = ParseColoring(Slurp(Path("w.col")), 9);
  EXPECT_TRUE(VerifyCfcn(split, w).valid);
  EXPECT_EQ(Call({"oracle", "--variant", "cn", "--k", "2", g}), kNo);
  EXPECT_THAT(out(), HasSubstr("decision: NO\n"));
  EXPECT_EQ(Call({"oracle", "--variant", "cn", "--k", "3", g}), kOk);
  EXPECT_THAT(out(), HasSubstr("decision: YES\n"));
  EXPECT_EQ(Call({"oracle", "--variant", "cn", "--limit", "4", g}), kSizeGuard);
  EXPECT_THAT(out(), HasSubstr("exit_code: 3\n"));
}

TEST_F(CliTest, OracleOnTriangle) {
  const std::string k3 = Put("k3.graph", WriteGraph(CompleteGraph(3)));
  EXPECT_EQ(Call({"oracle", "--variant", "on", k3}), kOk);
  EXPECT_THAT(out(), HasSubstr("chromatic: 3\n"));
}

TEST_F(CliTest, AutoOnLargeCographFallsBackToConstruction) {
  // Complete bipartite K_{9,9} is a cograph; CF-ON has no small modulator.
  std::vector<Edge> edges;
  for (int u = 0; u < 9; ++u) {
    for (int v = 9; v < 18; ++v) edges.push_back({u, v});
  }
  const std::string g = Put("k99.graph", WriteGraph(Graph(18, edges)));
  EXPECT_EQ(Call({"solve", "--variant", "on", "--budget", "2", g}), kOk);
  EXPECT_THAT(out(), HasSubstr("strategy: cograph\n"));
  EXPECT_THAT(out(), HasSubstr("optimality: upper-bound-only\n"));
}

TEST_F(CliTest, SolveStrategies) {
  const std::string p4 = Put("p4.graph", WriteGraph(PathGraph(4)));
  EXPECT_EQ(Call({"solve", "--variant", "cn", p4}), kOk);
  EXPECT_THAT(out(), HasSubstr("strategy: split\n"));
  EXPECT_THAT(out(), HasSubstr("colors_used: 2\n"));
  EXPECT_THAT(out(), HasSubstr("verified: yes\n"));
  EXPECT_THAT(out(), HasSubstr("optimality: exact\n"));

  EXPECT_EQ(Call({"solve", "--variant", "on", "--strategy", "lemma1", "--modulator", "1", p4}),
            kOk);
  EXPECT_THAT(out(), HasSubstr("modulator: 1\n"));
  EXPECT_EQ(Call({"solve", "--variant", "cn", "--strategy", "bipartite", "-o", Path("c.col"), p4}),
            kOk);
  EXPECT_TRUE(VerifyCfcn(PathGraph(4), ParseColoring(Slurp(Path("c.col")), 4)).valid);
  EXPECT_EQ(Call({"solve", "--variant", "cn", "--strategy", "cograph", p4}), kUsage);

  const std::string iv = Put("p4.iv", "i 0 0 2\ni 1 1 4\ni 2 3 6\ni 3 5 7\n");
  EXPECT_EQ(Call({"solve", "--variant", "cn", "--strategy", "interval", "--intervals", iv, p4}),
            kOk);
  EXPECT_THAT(out(), HasSubstr("optimality: upper-bound-only\n"));

  const std::string iso = Put("iso.graph", "p cf 3 1\ne 0 1\n");
  EXPECT_EQ(Call({"solve", "--variant", "on", iso}), kNo);
  EXPECT_THAT(out(), HasSubstr("infeasible"));
}

TEST_F(CliTest, RecognizeAndModulator) {
  const std::string p4 = Put("p4.graph", WriteGraph(PathGraph(4)));
  EXPECT_EQ(Call({"recognize", p4}), kOk);
  EXPECT_THAT(out(), HasSubstr("bipartite"));
  EXPECT_THAT(out(), HasSubstr("split_clique: 1 2\n"));
  const std::string c5 = Put("c5.graph", WriteGraph(CycleGraph(5)));
  EXPECT_EQ(Call({"modulator", "--class", "cluster", "--budget", "1", c5}), kNo);
  EXPECT_THAT(out(), HasSubstr("modulator: none\n"));
  EXPECT_EQ(Call({"modulator", "--class", "cluster", "--budget", "2", c5}), kOk);
  EXPECT_THAT(out(), HasSubstr("size: 2\n"));
}

TEST_F(CliTest, KernelizeWritesKernelAndProvenance) {
  const std::string k6 = Put("k6.graph", WriteGraph(CompleteGraph(6)));
  EXPECT_EQ(Call({"kernelize", "--variant", "cn", "--k", "1", "--modulator", "0", "-o",
                  Path("kernel.graph"), k6}),
            kOk);
  EXPECT_THAT(out(), HasSubstr("kernel_vertices: 3\n"));
  EXPECT_EQ(ParseGraph(Slurp(Path("kernel.graph"))), CompleteGraph(3));
  EXPECT_EQ(Slurp(Path("kernel.graph.prov")), "dv 3 1 1\ndv 4 1 1\ndv 5 1 1\n");
  EXPECT_EQ(Call({"kernelize", "--variant", "cn", "--k", "1", k6}), kUsage);
}

TEST_F(CliTest, Gadget) {
  const std::string k2 = Put("k2.graph", WriteGraph(CompleteGraph(2)));
  EXPECT_EQ(Call({"gadget", "encode", "--k", "3", "-o", Path("h.graph"), k2}), kOk);
  EXPECT_EQ(ParseGraph(Slurp(Path("h.graph"))).num_vertices(), 10);
  EXPECT_THAT(Slurp(Path("h.graph.map")), HasSubstr("x 2\ny 3\n"));
  EXPECT_EQ(Call({"gadget", "validate", "--k", "3", k2}), kOk);
  EXPECT_THAT(out(), HasSubstr("agrees: yes\n"));
  EXPECT_EQ(Call({"gadget", "validate", "--k", "2", k2}), kUsage);
  const std::string k4 = Put("k4.graph", WriteGraph(CompleteGraph(4)));
  EXPECT_EQ(Call({"gadget", "validate", "--k", "3", k4}), kSizeGuard);
}

TEST_F(CliTest, GenIsDeterministic) {
  EXPECT_EQ(Call({"gen", "--class", "split", "--n", "9", "--seed", "3"}), kOk);
  const std::string first = out();
  EXPECT_THAT(first, StartsWith("p cf 9 "));
  EXPECT_EQ(Call({"gen", "--class", "split", "--n", "9", "--seed", "3"}), kOk);
  EXPECT_EQ(out(), first);
  EXPECT_EQ(Call({"gen", "--class", "cluster-modulator", "--d", "1", "--cliques", "3,2", "-o",
                  Path("g.graph"), "--certificate", Path("g.cert")}),
            kOk);
  EXPECT_EQ(ParseGraph(Slurp(Path("g.graph"))).num_vertices(), 6);
  EXPECT_THAT(Slurp(Path("g.cert")), HasSubstr("modulator"));
  EXPECT_EQ(Call({"gen", "--class", "random", "--n", "4", "--d", "1"}), kUsage);
}

}  // namespace
}  // namespace cfc::cli
