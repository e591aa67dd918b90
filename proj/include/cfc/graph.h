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

#ifndef CFC_GRAPH_H_
#define CFC_GRAPH_H_

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cfc {

using Vertex = int;

// Sorted, duplicate-free list of vertex ids of some host graph.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
//
// Adjacency is kept twice: sorted neighbor lists for neighborhood scans and a
// packed n*n bit matrix for constant-time pair tests.
class Graph {
 public:
  Graph() = default;

  // Edgeless graph on `n` vertices.
  explicit Graph(int n);

  // Duplicate edges (in either orientation) collapse to one. Throws
  // InvalidArgument on self-loops or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int num_vertices() const { return n_; }
  int num_edges() const { return m_; }

  bool HasEdge(Vertex u, Vertex v) const {
    return u != v && matrix_[static_cast<size_t>(u) * n_ + v];
  }
  bool IsValidVertex(Vertex v) const { return v >= 0 && v < n_; }

  // Sorted neighbor list, i.e. N(v).
  std::span<const Vertex> Neighbors(Vertex v) const { return adjacency_[v]; }
  int Degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  // Edges with u < v in lexicographic order.
  std::vector<Edge> Edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adjacency_ == b.adjacency_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<bool> matrix_;
};

// N(v). Throws InvalidArgument for an invalid vertex.
VertexSet OpenNeighborhood(const Graph& g, Vertex v);

// N[v] = N(v) + {v}. Throws InvalidArgument for an invalid vertex.
VertexSet ClosedNeighborhood(const Graph& g, Vertex v);

// Partition of V(g) into connected components, each sorted, ordered by
// smallest member.
std::vector<VertexSet> ConnectedComponents(const Graph& g);

bool IsConnected(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // new id -> old id. Inverse lookup is `old_to_new`, -1 for vertices not in
  // the subset.
  std::vector<Vertex> new_to_old;
  std::vector<Vertex> old_to_new;
};

// G[s]. Vertices are renumbered in ascending order of their old ids.
InducedSubgraph Induce(const Graph& g, std::span<const Vertex> s);

Graph Complement(const Graph& g);

// Vertices adjacent to every other vertex, ascending.
VertexSet UniversalVertices(const Graph& g);

// Graph file: "p cf <n> <m>" then m lines "e <u> <v>"; "c" lines are
// comments. Throws ParseError naming the offending line.
Graph ParseGraph(std::string_view text);

// Canonical form: header, then edges sorted lexicographically.
std::string WriteGraph(const Graph& g);

// Common small graphs used throughout tests and tools.
Graph CompleteGraph(int n);
Graph PathGraph(int n);
Graph CycleGraph(int n);

}  // namespace cfc

#endif  // CFC_GRAPH_H_
