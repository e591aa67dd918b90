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

#include "cfc/hardness.h"

#include <algorithm>
#include <sstream>

#include "cfc/error.h"
#include "cfc/oracle.h"

namespace cfc {

std::string GadgetInstance::WriteMap() const {
  std::ostringstream out;
  for (Vertex v = 0; v < source.num_vertices(); ++v) out << "g " << v << ' ' << v << '\n';
  out << "x " << x << '\n' << "y " << y << '\n';
  for (size_t i = 0; i < augmented_edges.size(); ++i) {
    out << "i " << augmented_edges[i].u << ' ' << augmented_edges[i].v << ' '
        << edge_vertex[i] << '\n';
  }
  return out.str();
}

GadgetInstance EncodeGadget(const Graph& g, int k) {
  if (k < 3) throw InvalidArgument("the reduction needs k >= 3");
  const int n = g.num_vertices();
  GadgetInstance inst;
  inst.source = g;
  inst.k = k;
  inst.x = n;
  inst.y = n + 1;

  std::vector<Edge> aug = g.Edges();
  for (Vertex v = 0; v < n; ++v) {
    aug.push_back({v, inst.x});
    aug.push_back({v, inst.y});
  }
  aug.push_back({inst.x, inst.y});
  std::sort(aug.begin(), aug.end());
  inst.augmented = Graph(n + 2, aug);
  inst.augmented_edges = aug;

  std::vector<Edge> h_edges;
  for (Vertex u = 0; u < n + 2; ++u) {
    inst.partition.clique.push_back(u);
    for (Vertex v = u + 1; v < n + 2; ++v) h_edges.push_back({u, v});
  }
  Vertex next = n + 2;
  for (const Edge& e : aug) {
    inst.edge_vertex.push_back(next);
    inst.partition.independent.push_back(next);
    h_edges.push_back({e.u, next});
    h_edges.push_back({e.v, next});
    ++next;
  }
  inst.split = Graph(next, h_edges);
  return inst;
}

Coloring ForwardColoring(const GadgetInstance& inst, const Coloring& proper) {
  const Graph& g = inst.source;
  if (proper.num_vertices() != g.num_vertices() || !IsProperColoring(g, proper)) {
    throw InvalidArgument("source coloring is not proper");
  }
  for (Color c : proper.colors()) {
    if (c >= inst.k) throw InvalidArgument("source coloring uses a color >= k");
  }
  Coloring out = Coloring::Uniform(inst.split.num_vertices(), inst.k - 1);
  for (Vertex v = 0; v < g.num_vertices(); ++v) out.Set(v, proper[v]);
  out.Set(inst.x, inst.k);
  out.Set(inst.y, inst.k + 1);
  return out;
}

Coloring DecodeGadget(const GadgetInstance& inst, const Coloring& h_coloring) {
  if (h_coloring.num_vertices() != inst.split.num_vertices()) {
    throw InvalidArgument("coloring size does not match the gadget");
  }
  if (const Verdict verdict = VerifyCfon(inst.split, h_coloring); !verdict.valid) {
    throw InvalidArgument("not a CF-ON coloring of the gadget: " + verdict.reason);
  }
  if (h_coloring.NumColors() > inst.k + 2) {
    throw InvalidArgument("coloring uses more than k+2 colors");
  }
  std::vector<Color> colors(h_coloring.colors().begin(),
                            h_coloring.colors().begin() + inst.source.num_vertices());
  return Coloring(std::move(colors));
}

std::optional<Coloring> ProperColoring(const Graph& g, int k) {
  const int n = g.num_vertices();
  if (k < 1) throw InvalidArgument("k must be at least 1");
  std::vector<Color> colors(n, -1);
  // Depth-first over vertices 0..n-1; vertex v may open at most one new color.
  auto extend = [&](auto&& self, Vertex v, Color used) -> bool {
    if (v == n) return true;
    for (Color c = 0; c <= std::min(used, k - 1); ++c) {
      bool clash = false;
      for (Vertex w : g.Neighbors(v)) {
        if (w < v && colors[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      colors[v] = c;
      if (self(self, v + 1, std::max(used, c + 1))) return true;
    }
    colors[v] = -1;
    return false;
  };
  if (!extend(extend, 0, 0)) return std::nullopt;
  return Coloring(std::move(colors));
}

CrossValidation CrossValidate(const Graph& g, int k, const CrossValidateOptions& options) {
  const GadgetInstance inst = EncodeGadget(g, k);
  CrossValidation report;
  report.gadget_vertices = inst.split.num_vertices();
  if (report.gadget_vertices > options.gadget_vertex_limit) {
    throw SizeGuardError("gadget has " + std::to_string(report.gadget_vertices) +
                         " vertices, above the limit " +
                         std::to_string(options.gadget_vertex_limit));
  }
  report.source_witness = ProperColoring(g, k);
  report.source_colorable = report.source_witness.has_value();
  OracleOptions oracle;
  oracle.vertex_limit = options.gadget_vertex_limit;
  report.gadget_witness = DecideCf(inst.split, Variant::kOpen, k + 2, oracle);
  report.gadget_colorable = report.gadget_witness.has_value();

  if (report.source_witness) {
    const Coloring forward = ForwardColoring(inst, *report.source_witness);
    if (!VerifyCfon(inst.split, forward).valid || forward.NumColors() > k + 2) {
      report.defect = "forward coloring is not a CF-ON (k+2)-coloring";
    }
  }
  if (report.gadget_witness) {
    const Coloring decoded = DecodeGadget(inst, *report.gadget_witness);
    if (!IsProperColoring(g, decoded)) {
      report.defect = "decoded coloring is not proper";
    } else {
      // The colors of x and y never occur on G, so at most k remain.
      const Color cx = (*report.gadget_witness)[inst.x];
      const Color cy = (*report.gadget_witness)[inst.y];
      for (Color c : decoded.colors()) {
        if (c == cx || c == cy) report.defect = "decoded coloring reuses the color of x or y";
      }
      if (decoded.NumColors() > k) report.defect = "decoded coloring uses more than k colors";
    }
  }
  return report;
}

}  // namespace cfc
