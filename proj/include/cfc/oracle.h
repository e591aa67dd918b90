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

#ifndef CFC_ORACLE_H_
#define CFC_ORACLE_H_

#include <optional>
#include <span>
#include <vector>

#include "cfc/coloring.h"
#include "cfc/graph.h"

namespace cfc {

struct OracleOptions {
  // Largest color count tried by ExactCf; unset means n.
  std::optional<int> max_k;
  // Instances with more vertices are refused with SizeGuardError.
  int vertex_limit = 16;
};

struct OracleResult {
  // Minimum number of colors; unset when infeasible or above max_k.
  std::optional<int> chromatic;
  std::optional<Coloring> witness;
  // CF-ON on a graph with an isolated vertex (or the empty graph).
  bool infeasible = false;
};

// Exhaustive computation of the conflict-free chromatic number.
OracleResult ExactCf(const Graph& g, Variant variant, const OracleOptions& options = {});

// A conflict-free coloring with at most `k` distinct colors, if one exists.
// Throws InvalidArgument for k < 1 and SizeGuardError above the limit.
std::optional<Coloring> DecideCf(const Graph& g, Variant variant, int k,
                                 const OracleOptions& options = {});

// Lower-level search shared by the oracle and the threshold approximation:
// colors vertices 0..n-1 with colors 0..k-1 such that every listed vertex set
// has a unique color. Vertices are assigned in `order` (default ascending);
// vertex order[i] may only use colors up to 1 + the largest color already
// used, so palettes are canonical prefixes. Sets are tested the moment their
// last member gets colored. Performs no size guard.
std::optional<Coloring> FindConflictFreeColoring(
    int num_vertices, std::span<const VertexSet> hyperedges, int k,
    std::span<const Vertex> order = {});

// Hyperedges {N[v]} or {N(v)} of g.
std::vector<VertexSet> NeighborhoodHypergraph(const Graph& g, Variant variant);

}  // namespace cfc

#endif  // CFC_ORACLE_H_
