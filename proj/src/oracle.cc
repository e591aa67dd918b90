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

#include "cfc/oracle.h"

#include <algorithm>
#include <numeric>

#include "cfc/error.h"

namespace cfc {

namespace {

// Backtracking state. Every hyperedge tracks how many of its members are
// still uncolored, per-color occurrence counts, and how many colors occur
// exactly once; a hyperedge whose last member was just colored and has no
// singleton color refutes the branch.
class Search {
 public:
  Search(int n, std::span<const VertexSet> hyperedges, int k,
         std::span<const Vertex> order)
      : n_(n),
        k_(k),
        order_(order.begin(), order.end()),
        colors_(n, -1),
        containing_(n),
        remaining_(hyperedges.size()),
        singletons_(hyperedges.size(), 0),
        counts_(hyperedges.size() * k, 0) {
    if (order_.empty()) {
      order_.resize(n);
      std::iota(order_.begin(), order_.end(), 0);
    }
    for (size_t h = 0; h < hyperedges.size(); ++h) {
      remaining_[h] = static_cast<int>(hyperedges[h].size());
      if (remaining_[h] == 0) empty_edge_ = true;
      for (Vertex v : hyperedges[h]) containing_[v].push_back(static_cast<int>(h));
    }
  }

  std::optional<Coloring> Run() {
    if (empty_edge_) return std::nullopt;
    if (!Extend(0, -1)) return std::nullopt;
    return Coloring(colors_);
  }

 private:
  bool Extend(int depth, Color max_used) {
    if (depth == n_) return true;
    const Vertex v = order_[depth];
    const Color limit = std::min(k_ - 1, max_used + 1);
    for (Color c = 0; c <= limit; ++c) {
      if (Assign(v, c) && Extend(depth + 1, std::max(max_used, c))) return true;
      Unassign(v, c);
    }
    return false;
  }

  // Applies the assignment fully (so Unassign can always undo it) and reports
  // whether every hyperedge completed by it has a unique color.
  bool Assign(Vertex v, Color c) {
    colors_[v] = c;
    bool ok = true;
    for (int h : containing_[v]) {
      int& count = counts_[static_cast<size_t>(h) * k_ + c];
      ++count;
      if (count == 1) ++singletons_[h];
      if (count == 2) --singletons_[h];
      if (--remaining_[h] == 0 && singletons_[h] == 0) ok = false;
    }
    return ok;
  }

  void Unassign(Vertex v, Color c) {
    for (int h : containing_[v]) {
      int& count = counts_[static_cast<size_t>(h) * k_ + c];
      if (count == 1) --singletons_[h];
      if (count == 2) ++singletons_[h];
      --count;
      ++remaining_[h];
    }
    colors_[v] = -1;
  }

  int n_;
  int k_;
  std::vector<Vertex> order_;
  std::vector<Color> colors_;
  std::vector<std::vector<int>> containing_;
  std::vector<int> remaining_;
  std::vector<int> singletons_;
  std::vector<int> counts_;
  bool empty_edge_ = false;
};

void CheckGuard(const Graph& g, const OracleOptions& options) {
  if (g.num_vertices() > options.vertex_limit) {
    throw SizeGuardError("oracle refuses " + std::to_string(g.num_vertices()) +
                         " vertices (limit " + std::to_string(options.vertex_limit) +
                         ")");
  }
}

bool HasIsolatedVertex(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.Degree(v) == 0) return true;
  }
  return false;
}

}  // namespace

std::optional<Coloring> FindConflictFreeColoring(int num_vertices,
                                                 std::span<const VertexSet> hyperedges,
                                                 int k, std::span<const Vertex> order) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  if (!order.empty() && static_cast<int>(order.size()) != num_vertices) {
    throw InvalidArgument("vertex order must list every vertex");
  }
  return Search(num_vertices, hyperedges, k, order).Run();
}

std::vector<VertexSet> NeighborhoodHypergraph(const Graph& g, Variant variant) {
  std::vector<VertexSet> out;
  out.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out.push_back(variant == Variant::kClosed ? ClosedNeighborhood(g, v)
                                              : OpenNeighborhood(g, v));
  }
  return out;
}

std::optional<Coloring> DecideCf(const Graph& g, Variant variant, int k,
                                 const OracleOptions& options) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  CheckGuard(g, options);
  if (variant == Variant::kOpen && HasIsolatedVertex(g)) return std::nullopt;
  const auto hyperedges = NeighborhoodHypergraph(g, variant);
  return FindConflictFreeColoring(g.num_vertices(), hyperedges, k);
}

OracleResult ExactCf(const Graph& g, Variant variant, const OracleOptions& options) {
  CheckGuard(g, options);
  OracleResult result;
  if (variant == Variant::kOpen && (HasIsolatedVertex(g) || g.num_vertices() == 0)) {
    result.infeasible = true;
    return result;
  }
  if (g.num_vertices() == 0) {
    result.chromatic = 0;
    result.witness = Coloring();
    return result;
  }
  const int max_k = options.max_k.value_or(g.num_vertices());
  const auto hyperedges = NeighborhoodHypergraph(g, variant);
  for (int k = 1; k <= max_k; ++k) {
    if (auto witness = FindConflictFreeColoring(g.num_vertices(), hyperedges, k)) {
      result.chromatic = witness->NumColors();
      result.witness = std::move(witness);
      return result;
    }
  }
  return result;
}

}  // namespace cfc
