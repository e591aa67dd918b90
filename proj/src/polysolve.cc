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

#include "cfc/polysolve.h"

#include <algorithm>

#include "cfc/error.h"

namespace cfc {

std::string_view OptimalityName(Optimality o) {
  return o == Optimality::kExact ? "exact" : "upper-bound-only";
}

SolveOutcome MakeOutcome(Coloring coloring, Optimality optimality, std::string note) {
  SolveOutcome out;
  out.colors_used = coloring.NumColors();
  out.coloring = std::move(coloring);
  out.optimality = optimality;
  out.note = std::move(note);
  return out;
}

SolveOutcome SolveBipartiteCfcn(const Graph& g, const Bipartition& p) {
  if (!IsValidBipartition(g, p)) throw InvalidArgument("invalid bipartition");
  if (g.num_edges() == 0) throw InvalidArgument("graph has no edge");
  Coloring c = Coloring::Uniform(g.num_vertices(), 0);
  for (Vertex v : p.b) c.Set(v, 1);
  return MakeOutcome(std::move(c), Optimality::kExact);
}

namespace {

// Universal vertex -> 1, everything else 0.
SolveOutcome UniversalTwoColoring(const Graph& g, Vertex u) {
  Coloring c = Coloring::Uniform(g.num_vertices(), 0);
  c.Set(u, 1);
  return MakeOutcome(std::move(c), Optimality::kExact);
}

int IndependentNeighbors(const Graph& g, Vertex c, const SplitPartition& p) {
  int count = 0;
  for (Vertex i : p.independent) count += g.HasEdge(c, i);
  return count;
}

bool EveryCliqueVertexHasOneIndependentNeighbor(const Graph& g, const SplitPartition& p) {
  return std::all_of(p.clique.begin(), p.clique.end(),
                     [&](Vertex c) { return IndependentNeighbors(g, c, p) == 1; });
}

SplitPartition Normalized(SplitPartition p) {
  std::sort(p.clique.begin(), p.clique.end());
  std::sort(p.independent.begin(), p.independent.end());
  return p;
}

// p itself, then every valid partition obtained by moving one vertex across
// or exchanging one clique vertex with one independent vertex.
std::vector<SplitPartition> NearbyPartitions(const Graph& g, const SplitPartition& p) {
  std::vector<SplitPartition> out{p};
  auto consider = [&](SplitPartition q) {
    q = Normalized(std::move(q));
    if (IsValidSplitPartition(g, q)) out.push_back(std::move(q));
  };
  for (size_t a = 0; a < p.clique.size(); ++a) {
    SplitPartition q = p;
    q.independent.push_back(q.clique[a]);
    q.clique.erase(q.clique.begin() + a);
    consider(std::move(q));
  }
  for (size_t b = 0; b < p.independent.size(); ++b) {
    SplitPartition q = p;
    q.clique.push_back(q.independent[b]);
    q.independent.erase(q.independent.begin() + b);
    consider(std::move(q));
  }
  for (size_t a = 0; a < p.clique.size(); ++a) {
    for (size_t b = 0; b < p.independent.size(); ++b) {
      SplitPartition q = p;
      std::swap(q.clique[a], q.independent[b]);
      consider(std::move(q));
    }
  }
  return out;
}

// With clique side {a, b} colored a = 0, b = 1: independent vertices seeing
// only b must be 0, those seeing only a must be 1, and each clique vertex
// needs a monochromatic independent neighborhood.
std::optional<Coloring> TwoVertexCliqueColoring(const Graph& g, const SplitPartition& p) {
  if (p.clique.size() != 2) return std::nullopt;
  const Vertex a = p.clique[0], b = p.clique[1];
  VertexSet only_a, only_b, both;
  for (Vertex i : p.independent) {
    const bool sees_a = g.HasEdge(i, a), sees_b = g.HasEdge(i, b);
    if (sees_a && sees_b) both.push_back(i);
    else if (sees_a) only_a.push_back(i);
    else if (sees_b) only_b.push_back(i);
  }
  if (!only_a.empty() && !only_b.empty() && !both.empty()) return std::nullopt;
  Coloring c = Coloring::Uniform(g.num_vertices(), 0);
  c.Set(b, 1);
  for (Vertex i : only_a) c.Set(i, 1);
  const Color shared = only_a.empty() ? 0 : 1;
  for (Vertex i : both) c.Set(i, shared);
  return c;
}

}  // namespace

SolveOutcome SolveSplitCfcn(const Graph& g, const SplitPartition& p_in) {
  const SplitPartition p = Normalized(p_in);
  if (!IsValidSplitPartition(g, p)) throw InvalidArgument("invalid split partition");
  if (g.num_edges() == 0) throw InvalidArgument("graph has no edge");

  if (auto universal = UniversalVertices(g); !universal.empty()) {
    return UniversalTwoColoring(g, universal.front());
  }
  const auto candidates = NearbyPartitions(g, p);
  for (const SplitPartition& q : candidates) {
    if (EveryCliqueVertexHasOneIndependentNeighbor(g, q)) {
      Coloring c = Coloring::Uniform(g.num_vertices(), 0);
      for (Vertex i : q.independent) c.Set(i, 1);
      return MakeOutcome(std::move(c), Optimality::kExact);
    }
  }
  for (const SplitPartition& q : candidates) {
    if (auto c = TwoVertexCliqueColoring(g, q)) {
      return MakeOutcome(std::move(*c), Optimality::kExact);
    }
  }
  // No 2-coloring exists; the clique side carries the unique 0 for every
  // clique vertex and each independent vertex is unique in its own N[v].
  Coloring c = Coloring::Uniform(g.num_vertices(), 2);
  for (Vertex v : p.clique) c.Set(v, 1);
  if (!p.clique.empty()) c.Set(p.clique.front(), 0);
  return MakeOutcome(std::move(c), Optimality::kExact);
}

SolveOutcome SolveCograph(const Graph& g, const ModularDecompositionTree& tree,
                          Variant variant) {
  std::string why;
  if (!ValidateDecomposition(g, tree, &why)) {
    throw InvalidArgument("invalid decomposition tree: " + why);
  }
  if (tree.HasPrimeNode()) throw InvalidArgument("decomposition has a Prime node");
  if (tree.root < 0 || tree.node(tree.root).kind != ModuleKind::kSeries) {
    throw InvalidArgument("cotree root is not a Series node (graph disconnected)");
  }
  const int n = g.num_vertices();
  if (variant == Variant::kClosed) {
    if (auto universal = UniversalVertices(g); !universal.empty()) {
      return UniversalTwoColoring(g, universal.front());
    }
  } else if (n == 2) {
    return MakeOutcome(Coloring(std::vector<Color>{0, 1}), Optimality::kUpperBound);
  }
  // Root children split into the first module and the union of the rest; the
  // two sides are completely joined.
  const auto& children = tree.node(tree.root).children;
  const Vertex x = tree.node(children.front()).module.front();
  Vertex y = n;
  for (size_t i = 1; i < children.size(); ++i) {
    y = std::min(y, tree.node(children[i]).module.front());
  }
  Coloring c = Coloring::Uniform(n, 2);
  c.Set(x, 0);
  c.Set(y, 1);
  return MakeOutcome(std::move(c), Optimality::kUpperBound);
}

namespace {

struct ClusterView {
  VertexSet x;                     // sorted modulator
  std::vector<bool> in_x;
  std::vector<VertexSet> cliques;  // components of G - X, original ids
};

ClusterView ViewCluster(const Graph& g, const Modulator& m) {
  Modulator as_cluster{m.deleted, ResidualClass::kCluster};
  if (!IsValidModulator(g, as_cluster)) {
    throw InvalidArgument("G - X is not a cluster graph");
  }
  ClusterView view;
  view.x = m.deleted;
  std::sort(view.x.begin(), view.x.end());
  view.in_x.assign(g.num_vertices(), false);
  for (Vertex v : view.x) view.in_x[v] = true;
  InducedSubgraph rest = Residual(g, m);
  for (const VertexSet& comp : ConnectedComponents(rest.graph)) {
    VertexSet clique;
    for (Vertex v : comp) clique.push_back(rest.new_to_old[v]);
    view.cliques.push_back(std::move(clique));
  }
  return view;
}

}  // namespace

SolveOutcome Lemma1Cfcn(const Graph& g, const Modulator& m) {
  const ClusterView view = ViewCluster(g, m);
  Coloring c = Coloring::Uniform(g.num_vertices(), 1);
  for (const VertexSet& clique : view.cliques) c.Set(clique.front(), 0);
  for (size_t i = 0; i < view.x.size(); ++i) c.Set(view.x[i], 2 + static_cast<Color>(i));
  return MakeOutcome(std::move(c), Optimality::kUpperBound);
}

SolveOutcome Lemma1Cfon(const Graph& g, const Modulator& m) {
  const ClusterView view = ViewCluster(g, m);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.Degree(v) == 0) {
      throw InvalidArgument("vertex " + std::to_string(v) +
                            " is isolated; no CF-ON coloring exists");
    }
  }
  const Color d = static_cast<Color>(view.x.size());
  Coloring c = Coloring::Uniform(g.num_vertices(), 0);
  for (Color i = 0; i < d; ++i) c.Set(view.x[i], 1 + i);

  // A modulator vertex whose neighborhood is all 0 gets one neighbor
  // recolored with a fresh color from d+1..2d.
  Color fresh = d + 1;
  for (Vertex x : view.x) {
    auto nbrs = g.Neighbors(x);
    const bool all_zero =
        std::all_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return c[w] == 0; });
    if (all_zero) c.Set(nbrs.front(), fresh++);
  }

  std::string note;
  const Color clique_color = 2 * d + 1;
  for (const VertexSet& clique : view.cliques) {
    const bool all_zero =
        std::all_of(clique.begin(), clique.end(), [&](Vertex v) { return c[v] == 0; });
    if (!all_zero) continue;
    // Prefer a vertex that sees X: its open neighborhood then holds a
    // modulator color, which occurs exactly once in the whole coloring.
    auto sees_x = [&](Vertex v) {
      auto nbrs = g.Neighbors(v);
      return std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return view.in_x[w]; });
    };
    auto it = std::find_if(clique.begin(), clique.end(), sees_x);
    const Vertex u = it != clique.end() ? *it : clique.front();
    c.Set(u, clique_color);
    if (it == clique.end() && clique.size() >= 3) {
      // The clique is a whole component and u sees only 0s. Any color other
      // than 0 and 2d+1 repairs it; the component touches nothing else.
      const Color extra = d >= 1 ? 1 : 2;
      c.Set(clique[1], extra);
      if (d == 0) {
        note = "isolated clique of size >= 3 with d = 0 needs 3 colors (bound 2d+2 = 2)";
      }
    }
  }
  return MakeOutcome(std::move(c), Optimality::kUpperBound, std::move(note));
}

}  // namespace cfc
