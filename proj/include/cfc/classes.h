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

#ifndef CFC_CLASSES_H_
#define CFC_CLASSES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfc/graph.h"

namespace cfc {

enum class GraphClass {
  kBipartite,
  kCluster,
  kSplit,
  kThreshold,
  kCograph,
  kIntervalGiven,
  kGeneral,
};

std::string_view GraphClassName(GraphClass c);
std::optional<GraphClass> ParseGraphClass(std::string_view name);

struct Bipartition {
  VertexSet a;
  VertexSet b;
};

// Clique side and independent side of a split graph.
struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
};

// Threshold certificate: vertices removed one at a time, each isolated or
// universal in what remained. Reversed, it is a creation sequence.
struct ThresholdStep {
  Vertex vertex;
  bool universal;  // false: isolated when removed
};
using ThresholdOrder = std::vector<ThresholdStep>;

std::optional<Bipartition> RecognizeBipartite(const Graph& g);
// Each component's vertex set, if every component is a clique.
std::optional<std::vector<VertexSet>> RecognizeCluster(const Graph& g);
// Partition whose clique side is a maximum clique.
std::optional<SplitPartition> RecognizeSplit(const Graph& g);
std::optional<ThresholdOrder> RecognizeThreshold(const Graph& g);

bool IsValidBipartition(const Graph& g, const Bipartition& p);
bool IsValidSplitPartition(const Graph& g, const SplitPartition& p);
// Replays the creation sequence and checks it rebuilds exactly g.
bool ThresholdOrderRebuilds(const Graph& g, const ThresholdOrder& order);

// ---------------------------------------------------------------------------
// Modular decomposition.

enum class ModuleKind { kLeaf, kSeries, kParallel, kPrime };

std::string_view ModuleKindName(ModuleKind kind);

struct ModuleNode {
  ModuleKind kind = ModuleKind::kLeaf;
  VertexSet module;           // M(h), sorted
  std::vector<int> children;  // node indices, ordered by smallest member
};

struct ModularDecompositionTree {
  std::vector<ModuleNode> nodes;
  int root = -1;

  const ModuleNode& node(int i) const { return nodes[i]; }
  bool HasPrimeNode() const;
};

// Recursive splitting: a node whose induced graph is disconnected becomes
// Parallel over its components, one whose complement is disconnected becomes
// Series over the co-components, and anything else is Prime over its maximal
// proper modules.
ModularDecompositionTree ModularDecomposition(const Graph& g);

// G_h: one vertex per child of `node`, adjacent iff the child modules are.
Graph RepresentativeGraph(const Graph& g, const ModularDecompositionTree& tree, int node);

// True iff every vertex outside `m` sees all of `m` or none of it.
bool IsModule(const Graph& g, std::span<const Vertex> m);

// Checks the tree's structural properties against g: leaves, module property
// of every internal node, Series/Parallel representative graphs.
bool ValidateDecomposition(const Graph& g, const ModularDecompositionTree& tree,
                           std::string* why = nullptr);

// ---------------------------------------------------------------------------

struct Recognition {
  std::vector<GraphClass> labels;  // in enum order; kGeneral if none holds
  std::optional<Bipartition> bipartition;
  std::optional<std::vector<VertexSet>> cluster_cliques;
  std::optional<SplitPartition> split;
  std::optional<ThresholdOrder> threshold;
  std::optional<ModularDecompositionTree> cotree;  // set iff cograph

  bool Has(GraphClass c) const;
};

Recognition Recognize(const Graph& g);

// ---------------------------------------------------------------------------
// Modulators.

enum class ResidualClass { kCluster, kThreshold };

struct Modulator {
  VertexSet deleted;  // X
  ResidualClass residual_class = ResidualClass::kCluster;

  int size() const { return static_cast<int>(deleted.size()); }
};

// Minimum vertex set of size <= budget whose deletion leaves a cluster graph,
// lexicographically smallest among the minimum ones; nullopt proves no such
// set exists. Branches three ways on the first induced P3.
std::optional<Modulator> ClusterModulator(const Graph& g, int budget);

// Same for threshold graphs, branching four ways on the first induced P4, C4
// or 2K2.
std::optional<Modulator> ThresholdModulator(const Graph& g, int budget);

// G - X belongs to the stated residual class.
bool IsValidModulator(const Graph& g, const Modulator& m);

// G - X as an induced subgraph.
InducedSubgraph Residual(const Graph& g, const Modulator& m);

}  // namespace cfc

#endif  // CFC_CLASSES_H_
