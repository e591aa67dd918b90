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

#include "cfc/coloring.h"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "cfc/error.h"

namespace cfc {

std::string_view VariantName(Variant variant) {
  return variant == Variant::kClosed ? "cn" : "on";
}

Coloring::Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {
  for (Color c : colors_) {
    if (c < 0) throw InvalidArgument("colors must be non-negative");
  }
}

Coloring Coloring::Uniform(int n, Color color) {
  return Coloring(std::vector<Color>(n, color));
}

void Coloring::Set(Vertex v, Color c) {
  if (c < 0) throw InvalidArgument("colors must be non-negative");
  colors_.at(v) = c;
}

std::vector<Color> Coloring::Palette() const {
  std::vector<Color> out(colors_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int Coloring::NumColors() const { return static_cast<int>(Palette().size()); }

std::optional<Color> UniqueColor(const Coloring& c, std::span<const Vertex> s) {
  std::map<Color, int> counts;
  for (Vertex v : s) ++counts[c[v]];
  for (const auto& [color, count] : counts) {
    if (count == 1) return color;
  }
  return std::nullopt;
}

namespace {

Verdict VerifyImpl(const Graph& g, const Coloring& c, bool closed) {
  Verdict verdict;
  if (c.num_vertices() != g.num_vertices()) {
    verdict.reason = "coloring covers " + std::to_string(c.num_vertices()) +
                     " vertices, graph has " + std::to_string(g.num_vertices());
    return verdict;
  }
  std::vector<Vertex> hood;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nbrs = g.Neighbors(v);
    hood.assign(nbrs.begin(), nbrs.end());
    if (closed) hood.push_back(v);
    if (!UniqueColor(c, hood)) {
      verdict.failing_vertex = v;
      verdict.reason = (closed ? "N[" : "N(") + std::to_string(v) + (closed ? "]" : ")") +
                       " has no uniquely colored vertex";
      return verdict;
    }
  }
  verdict.valid = true;
  return verdict;
}

}  // namespace

Verdict VerifyCfcn(const Graph& g, const Coloring& c) {
  return VerifyImpl(g, c, /*closed=*/true);
}

Verdict VerifyCfon(const Graph& g, const Coloring& c) {
  return VerifyImpl(g, c, /*closed=*/false);
}

Verdict Verify(const Graph& g, const Coloring& c, Variant variant) {
  return variant == Variant::kClosed ? VerifyCfcn(g, c) : VerifyCfon(g, c);
}

Coloring ParseColoring(std::string_view text, int num_vertices) {
  std::vector<Color> colors(num_vertices, -1);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    if (tag != "v") throw ParseError(line_no, "expected 'v <vertex> <color>'");
    long long v = 0, color = 0;
    std::string extra;
    if (!(fields >> v >> color) || (fields >> extra)) {
      throw ParseError(line_no, "expected 'v <vertex> <color>'");
    }
    if (v < 0 || v >= num_vertices) {
      throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
    }
    if (color < 0 || color > std::numeric_limits<Color>::max()) {
      throw ParseError(line_no, "color must be a non-negative int");
    }
    if (colors[v] != -1) {
      throw ParseError(line_no, "duplicate line for vertex " + std::to_string(v));
    }
    colors[v] = static_cast<Color>(color);
  }
  for (Vertex v = 0; v < num_vertices; ++v) {
    if (colors[v] == -1) {
      throw ParseError(0, "missing color for vertex " + std::to_string(v));
    }
  }
  return Coloring(std::move(colors));
}

std::string WriteColoring(const Coloring& c) {
  std::ostringstream out;
  for (Vertex v = 0; v < c.num_vertices(); ++v) {
    out << "v " << v << ' ' << c[v] << '\n';
  }
  return out.str();
}

bool IsProperColoring(const Graph& g, const Coloring& c) {
  for (const Edge& e : g.Edges()) {
    if (c[e.u] == c[e.v]) return false;
  }
  return true;
}

}  // namespace cfc
