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

#ifndef CFC_POLYSOLVE_H_
#define CFC_POLYSOLVE_H_

#include <string>
#include <string_view>

#include "cfc/classes.h"
#include "cfc/coloring.h"
#include "cfc/graph.h"

namespace cfc {

enum class Optimality {
  kExact,       // colors_used is the conflict-free chromatic number
  kUpperBound,  // valid coloring, minimality not claimed
};

std::string_view OptimalityName(Optimality o);  // "exact" / "upper-bound-only"

struct SolveOutcome {
  Coloring coloring;
  int colors_used = 0;
  Optimality optimality = Optimality::kUpperBound;
  // Set when a construction hit a documented corner case (for example the
  // isolated-clique repair in Lemma1Cfon); describes what happened.
  std::string note;
};

SolveOutcome MakeOutcome(Coloring coloring, Optimality optimality, std::string note = {});

// Side a gets color 0, side b color 1. Exact for any graph with an edge.
SolveOutcome SolveBipartiteCfcn(const Graph& g, const Bipartition& p);

// CF-CN on split graphs, always exact:
//  1. a universal vertex gets 1, everything else 0;
//  2. else, if on p or a partition one vertex move/exchange away from it
//     every clique vertex has exactly one independent neighbor, clique = 0,
//     independent = 1;
//  3. else, for a two-vertex clique side {a, b}, a 2-coloring exists unless
//     independent vertices of all three kinds (only a, only b, both) occur;
//  4. else the smallest clique vertex gets 0, the rest of the clique 1, the
//     independent side 2.
SolveOutcome SolveSplitCfcn(const Graph& g, const SplitPartition& p);

// Cograph constructions from the cotree. The root must be a Series node.
// CF-CN with a universal vertex is exact (2 colors); every other case colors
// one vertex of the first root child 0, one vertex of the remaining children
// 1, and the rest 2, and is reported as an upper bound.
SolveOutcome SolveCograph(const Graph& g, const ModularDecompositionTree& tree,
                          Variant variant);

// Direct constructions for a cluster modulator X with d = |X|:
// CF-CN uses at most d + 2 colors, CF-ON at most 2d + 2 (3 for an isolated
// clique of size >= 3 when d = 0; see note).
SolveOutcome Lemma1Cfcn(const Graph& g, const Modulator& m);
SolveOutcome Lemma1Cfon(const Graph& g, const Modulator& m);

}  // namespace cfc

#endif  // CFC_POLYSOLVE_H_
