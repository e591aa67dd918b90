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

#ifndef CFC_HARDNESS_H_
#define CFC_HARDNESS_H_

#include <optional>
#include <string>
#include <vector>

#include "cfc/classes.h"
#include "cfc/coloring.h"
#include "cfc/graph.h"

namespace cfc {

// Split-graph instance H built from (G, k): G' is G plus two universal
// vertices x and y; H has clique V(G') and one independent vertex I_uv per
// edge uv of G', adjacent to exactly u and v.
//
// Numbering in H: vertices of G keep their ids, x = n, y = n + 1, and the
// I-vertices follow in sorted order of the edges of G'.
struct GadgetInstance {
  Graph source;
  int k = 0;
  Graph augmented;  // G'
  Graph split;      // H
  Vertex x = 0;
  Vertex y = 0;
  std::vector<Edge> augmented_edges;  // sorted; index i <-> vertex edge_vertex[i]
  std::vector<Vertex> edge_vertex;
  SplitPartition partition;

  // "g <v> <h-vertex>", "x <h>", "y <h>", "i <u> <v> <h>" lines.
  std::string WriteMap() const;
};

// Throws InvalidArgument for k < 3.
GadgetInstance EncodeGadget(const Graph& g, int k);

// The forward coloring: G keeps its proper coloring (colors 0..k-1), every
// I-vertex gets k-1, x gets k and y gets k+1.
Coloring ForwardColoring(const GadgetInstance& inst, const Coloring& proper);

// Restriction of a CF-ON coloring of H with at most k+2 colors to G. Throws
// InvalidArgument when the coloring is not such a coloring.
Coloring DecodeGadget(const GadgetInstance& inst, const Coloring& h_coloring);

// Brute-force proper k-coloring (colors 0..k-1), canonical palette order.
std::optional<Coloring> ProperColoring(const Graph& g, int k);

struct CrossValidation {
  bool source_colorable = false;  // G is k-colorable
  bool gadget_colorable = false;  // H has a CF-ON (k+2)-coloring
  int gadget_vertices = 0;
  std::optional<Coloring> source_witness;
  std::optional<Coloring> gadget_witness;
  // Set when a witness fails its own check after decoding or forward
  // construction.
  std::string defect;

  bool agrees() const { return source_colorable == gadget_colorable && defect.empty(); }
};

struct CrossValidateOptions {
  int gadget_vertex_limit = 16;
};

// Decides both sides independently and cross-checks the witnesses through
// ForwardColoring and DecodeGadget. Throws SizeGuardError when H is larger
// than the limit.
CrossValidation CrossValidate(const Graph& g, int k, const CrossValidateOptions& options = {});

}  // namespace cfc

#endif  // CFC_HARDNESS_H_
