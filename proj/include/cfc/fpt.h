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

#ifndef CFC_FPT_H_
#define CFC_FPT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfc/classes.h"
#include "cfc/coloring.h"
#include "cfc/graph.h"
#include "cfc/polysolve.h"

namespace cfc {

// Modulator neighborhoods are encoded as bitmasks over the sorted modulator:
// bit i stands for the i-th smallest vertex of X.
inline constexpr int kMaxTypeModulator = 20;

struct CliqueTypes {
  VertexSet clique;
  // Nonempty types T_Y^C in ascending mask order.
  std::vector<std::pair<uint32_t, VertexSet>> types;

  Vertex rep() const { return clique.front(); }
};

struct TypeTable {
  VertexSet modulator;
  std::vector<CliqueTypes> cliques;  // ordered by smallest member
};

// Splits every clique of G - X by modulator neighborhood. Throws
// InvalidArgument unless m is a cluster modulator with |X| <= 20.
TypeTable ComputeTypes(const Graph& g, const Modulator& m);

uint32_t ModulatorMask(const Graph& g, const VertexSet& sorted_x, Vertex v);

// Dense vector T^C of length 2^d, entry Y = min(|T_Y^C|, cap).
std::vector<int> MegaTypeVector(const CliqueTypes& c, int d, int cap);

// Per-type vertex cap of Rule 1 (see Reduce): k+1 for CF-CN, 2k+1 for CF-ON.
int TypeCap(Variant variant, int k);

// d + (k+2)^(2^d) * (d+1) * 2^d * cap, as a double (it overflows integers
// already for moderate d).
double KernelSizeBound(int d, int k, Variant variant);

struct DeletedVertex {
  Vertex vertex;
  Vertex clique_rep;
  uint32_t mask;
};

struct DeletedClique {
  Vertex clique_rep;
  Vertex survivor_rep;  // first kept clique of the same mega-type
};

struct KernelInstance {
  Variant variant = Variant::kClosed;
  int k = 0;
  Modulator modulator;  // original ids
  Graph kernel;
  std::vector<Vertex> kernel_to_original;
  std::vector<Vertex> original_to_kernel;  // -1 when deleted
  // k is large enough for Lemma1Cfcn/Lemma1Cfon to settle the instance;
  // the kernel is still built.
  bool short_circuit = false;
  int cap = 0;
  double size_bound = 0;
  std::vector<DeletedVertex> deleted_vertices;  // Rule 1, in deletion order
  std::vector<DeletedClique> deleted_cliques;   // Rule 2
  // Cliques after Rule 1 (kept and deleted), with their mega-type group.
  std::vector<CliqueTypes> reduced_cliques;
  std::vector<int> mega_type;  // group id per reduced clique

  // "dv <vertex> <clique-rep> <Y-bitmask>" and "dc <clique-rep> <survivor-rep>"
  // lines.
  std::string WriteProvenance() const;
};

// Rule 1 exhaustively (keep the cap smallest ids of each type), then Rule 2
// (keep the d+1 cliques with the smallest representatives per mega-type).
// Throws InvalidArgument for k < 1, a bad modulator, or (CF-ON) an isolated
// vertex.
KernelInstance Reduce(const Graph& g, const Modulator& m, Variant variant, int k);
KernelInstance ReduceCfcn(const Graph& g, const Modulator& m, int k);
KernelInstance ReduceCfon(const Graph& g, const Modulator& m, int k);

// Extends a coloring of inst.kernel with at most k colors to the original
// graph by undoing Rule 2 (copy an unmarked clique of the same mega-type)
// and then Rule 1 (reuse a repeated color of the surviving type).
Coloring LiftColoring(const Graph& g, const KernelInstance& inst, const Coloring& kernel_coloring);

struct KernelSolveOptions {
  // The kernel is decided by the exact oracle; this is its vertex guard.
  int kernel_vertex_limit = 24;
};

struct KernelDecision {
  bool yes = false;
  bool infeasible = false;  // CF-ON with an isolated vertex
  bool short_circuit = false;
  std::optional<Coloring> coloring;  // of g, when yes
  int kernel_vertices = 0;
};

// Decides whether g has a conflict-free coloring with at most k colors and
// lifts a witness back. Throws SizeGuardError when the kernel is over the
// limit.
KernelDecision SolveViaKernel(const Graph& g, const Modulator& m, Variant variant, int k,
                              const KernelSolveOptions& options = {});

// Smallest k accepted by SolveViaKernel, with its lifted coloring (exact).
SolveOutcome SolveFpt(const Graph& g, const Modulator& m, Variant variant,
                      const KernelSolveOptions& options = {});

// ---------------------------------------------------------------------------
// Distance to threshold.

struct ApproxOutcome {
  SolveOutcome outcome;
  // Optimum of the partial coloring of H = G[X u N(X)] without edges inside
  // N(X), at least 1 for a nonempty graph; a lower bound on the
  // conflict-free chromatic number.
  int lower_bound = 0;
};

struct ApproxOptions {
  int partial_vertex_limit = 24;  // guard on the capped H
};

// CF-CN coloring with at most lower_bound + 1 colors. Requires a threshold
// modulator.
ApproxOutcome ApproxCfcnThreshold(const Graph& g, const Modulator& m,
                                  const ApproxOptions& options = {});

// CF-ON coloring with at most lower_bound + 2 colors. Throws InvalidArgument
// when a vertex is isolated.
ApproxOutcome ApproxCfonThreshold(const Graph& g, const Modulator& m,
                                  const ApproxOptions& options = {});

}  // namespace cfc

#endif  // CFC_FPT_H_
