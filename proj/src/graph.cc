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

#include "cfc/graph.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cfc/error.h"

namespace cfc {

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges)
    : n_(n),
      adjacency_(static_cast<size_t>(std::max(n, 0))),
      matrix_(static_cast<size_t>(std::max(n, 0)) * std::max(n, 0), false) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  for (const Edge& e : edges) {
    if (!IsValidVertex(e.u) || !IsValidVertex(e.v)) {
      throw InvalidArgument("edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ") has an endpoint outside 0.." +
                            std::to_string(n - 1));
    }
    if (e.u == e.v) {
      throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    }
    const size_t uv = static_cast<size_t>(e.u) * n_ + e.v;
    if (matrix_[uv]) continue;
    matrix_[uv] = true;
    matrix_[static_cast<size_t>(e.v) * n_ + e.u] = true;
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    ++m_;
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

namespace {

void CheckVertex(const Graph& g, Vertex v) {
  if (!g.IsValidVertex(v)) {
    throw InvalidArgument("invalid vertex id " + std::to_string(v));
  }
}

}  // namespace

VertexSet OpenNeighborhood(const Graph& g, Vertex v) {
  CheckVertex(g, v);
  auto nbrs = g.Neighbors(v);
  return VertexSet(nbrs.begin(), nbrs.end());
}

VertexSet ClosedNeighborhood(const Graph& g, Vertex v) {
  VertexSet out = OpenNeighborhood(g, v);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

std::vector<VertexSet> ConnectedComponents(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> components;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.Neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool IsConnected(const Graph& g) {
  return ConnectedComponents(g).size() <= 1;
}

InducedSubgraph Induce(const Graph& g, std::span<const Vertex> s) {
  InducedSubgraph out;
  out.new_to_old.assign(s.begin(), s.end());
  std::sort(out.new_to_old.begin(), out.new_to_old.end());
  out.old_to_new.assign(g.num_vertices(), -1);
  for (size_t i = 0; i < out.new_to_old.size(); ++i) {
    Vertex v = out.new_to_old[i];
    CheckVertex(g, v);
    if (out.old_to_new[v] != -1) {
      throw InvalidArgument("duplicate vertex " + std::to_string(v) +
                            " in induced subset");
    }
    out.old_to_new[v] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex old_u : out.new_to_old) {
    for (Vertex old_w : g.Neighbors(old_u)) {
      if (old_u < old_w && out.old_to_new[old_w] != -1) {
        edges.push_back({out.old_to_new[old_u], out.old_to_new[old_w]});
      }
    }
  }
  out.graph = Graph(static_cast<int>(out.new_to_old.size()), edges);
  return out;
}

Graph Complement(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.HasEdge(u, v)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

VertexSet UniversalVertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.Degree(v) == g.num_vertices() - 1) out.push_back(v);
  }
  return out;
}

namespace {

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int ParseInt(std::string_view tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph ParseGraph(std::string_view text) {
  int n = -1;
  int declared_m = 0;
  int edge_lines = 0;
  std::vector<Edge> edges;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tok = Tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError(line_no, "duplicate header");
      if (tok.size() != 4 || tok[1] != "cf") {
        throw ParseError(line_no, "malformed header, expected 'p cf <n> <m>'");
      }
      n = ParseInt(tok[2], line_no);
      declared_m = ParseInt(tok[3], line_no);
      if (n < 0 || declared_m < 0) {
        throw ParseError(line_no, "negative count in header");
      }
      continue;
    }
    if (tok[0] == "e") {
      if (n < 0) throw ParseError(line_no, "edge line before header");
      if (tok.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      int u = ParseInt(tok[1], line_no);
      int v = ParseInt(tok[2], line_no);
      if (u < 0 || u >= n || v < 0 || v >= n) {
        throw ParseError(line_no, "vertex id out of range 0.." + std::to_string(n - 1));
      }
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      edges.push_back({std::min(u, v), std::max(u, v)});
      ++edge_lines;
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
  }
  if (n < 0) throw ParseError(0, "missing 'p cf <n> <m>' header");
  if (edge_lines != declared_m) {
    throw ParseError(0, "header declares " + std::to_string(declared_m) +
                            " edge lines, found " + std::to_string(edge_lines));
  }
  return Graph(n, edges);
}

std::string WriteGraph(const Graph& g) {
  std::ostringstream out;
  out << "p cf " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.Edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph CompleteGraph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph PathGraph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return Graph(n, edges);
}

Graph CycleGraph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  if (n >= 3) edges.push_back({0, n - 1});
  return Graph(n, edges);
}

}  // namespace cfc
