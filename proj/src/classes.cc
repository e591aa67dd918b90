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

#include "cfc/classes.h"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "cfc/error.h"

namespace cfc {

std::string_view GraphClassName(GraphClass c) {
  switch (c) {
    case GraphClass::kBipartite: return "bipartite";
    case GraphClass::kCluster: return "cluster";
    case GraphClass::kSplit: return "split";
    case GraphClass::kThreshold: return "threshold";
    case GraphClass::kCograph: return "cograph";
    case GraphClass::kIntervalGiven: return "interval-given";
    case GraphClass::kGeneral: return "general";
  }
  return "?";
}

std::optional<GraphClass> ParseGraphClass(std::string_view name) {
  for (GraphClass c : {GraphClass::kBipartite, GraphClass::kCluster, GraphClass::kSplit,
                       GraphClass::kThreshold, GraphClass::kCograph,
                       GraphClass::kIntervalGiven, GraphClass::kGeneral}) {
    if (GraphClassName(c) == name) return c;
  }
  return std::nullopt;
}

std::optional<Bipartition> RecognizeBipartite(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> side(n, -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex w : g.Neighbors(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition p;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? p.a : p.b).push_back(v);
  return p;
}

std::optional<std::vector<VertexSet>> RecognizeCluster(const Graph& g) {
  auto components = ConnectedComponents(g);
  for (const VertexSet& comp : components) {
    for (Vertex v : comp) {
      if (g.Degree(v) != static_cast<int>(comp.size()) - 1) return std::nullopt;
    }
  }
  return components;
}

bool IsValidSplitPartition(const Graph& g, const SplitPartition& p) {
  std::vector<int> seen(g.num_vertices(), 0);
  for (const VertexSet* side : {&p.clique, &p.independent}) {
    for (Vertex v : *side) {
      if (!g.IsValidVertex(v) || seen[v]++) return false;
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != g.num_vertices()) return false;
  for (size_t i = 0; i < p.clique.size(); ++i) {
    for (size_t j = i + 1; j < p.clique.size(); ++j) {
      if (!g.HasEdge(p.clique[i], p.clique[j])) return false;
    }
  }
  for (size_t i = 0; i < p.independent.size(); ++i) {
    for (size_t j = i + 1; j < p.independent.size(); ++j) {
      if (g.HasEdge(p.independent[i], p.independent[j])) return false;
    }
  }
  return true;
}

std::optional<SplitPartition> RecognizeSplit(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Vertex> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return g.Degree(a) > g.Degree(b); });
  // Degree-sequence test: with d_1 >= ... >= d_n and m the largest i having
  // d_i >= i - 1, g is split iff sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i.
  int m = 0;
  for (int i = 1; i <= n; ++i) {
    if (g.Degree(by_degree[i - 1]) >= i - 1) m = i;
  }
  long long head = 0, tail = 0;
  for (int i = 0; i < n; ++i) (i < m ? head : tail) += g.Degree(by_degree[i]);
  if (head != static_cast<long long>(m) * (m - 1) + tail) return std::nullopt;

  SplitPartition p;
  p.clique.assign(by_degree.begin(), by_degree.begin() + m);
  p.independent.assign(by_degree.begin() + m, by_degree.end());
  // Grow the clique side while some independent vertex sees all of it.
  for (bool grew = true; grew;) {
    grew = false;
    for (auto it = p.independent.begin(); it != p.independent.end(); ++it) {
      Vertex v = *it;
      bool full = std::all_of(p.clique.begin(), p.clique.end(),
                              [&](Vertex c) { return g.HasEdge(v, c); });
      if (full) {
        p.clique.push_back(v);
        p.independent.erase(it);
        grew = true;
        break;
      }
    }
  }
  std::sort(p.clique.begin(), p.clique.end());
  std::sort(p.independent.begin(), p.independent.end());
  if (!IsValidSplitPartition(g, p)) return std::nullopt;
  return p;
}

std::optional<ThresholdOrder> RecognizeThreshold(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<bool> alive(n, true);
  std::vector<int> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.Degree(v);
  ThresholdOrder order;
  for (int left = n; left > 0; --left) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n && pick < 0; ++v) {
      if (alive[v] && (degree[v] == 0 || degree[v] == left - 1)) pick = v;
    }
    if (pick < 0) return std::nullopt;
    order.push_back({pick, degree[pick] > 0});
    alive[pick] = false;
    for (Vertex w : g.Neighbors(pick)) {
      if (alive[w]) --degree[w];
    }
  }
  return order;
}

bool IsValidBipartition(const Graph& g, const Bipartition& p) {
  std::vector<int> side(g.num_vertices(), -1);
  for (Vertex v : p.a) {
    if (!g.IsValidVertex(v) || side[v] != -1) return false;
    side[v] = 0;
  }
  for (Vertex v : p.b) {
    if (!g.IsValidVertex(v) || side[v] != -1) return false;
    side[v] = 1;
  }
  if (std::count(side.begin(), side.end(), -1) != 0) return false;
  for (const Edge& e : g.Edges()) {
    if (side[e.u] == side[e.v]) return false;
  }
  return true;
}

bool ThresholdOrderRebuilds(const Graph& g, const ThresholdOrder& order) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<bool> seen(n, false);
  std::vector<Edge> edges;
  std::vector<Vertex> present;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (!g.IsValidVertex(it->vertex) || seen[it->vertex]) return false;
    seen[it->vertex] = true;
    if (it->universal) {
      for (Vertex w : present) edges.push_back({it->vertex, w});
    }
    present.push_back(it->vertex);
  }
  return Graph(n, edges) == g;
}

// ---------------------------------------------------------------------------

std::string_view ModuleKindName(ModuleKind kind) {
  switch (kind) {
    case ModuleKind::kLeaf: return "Leaf";
    case ModuleKind::kSeries: return "Series";
    case ModuleKind::kParallel: return "Parallel";
    case ModuleKind::kPrime: return "Prime";
  }
  return "?";
}

bool ModularDecompositionTree::HasPrimeNode() const {
  return std::any_of(nodes.begin(), nodes.end(),
                     [](const ModuleNode& n) { return n.kind == ModuleKind::kPrime; });
}

bool IsModule(const Graph& g, std::span<const Vertex> m) {
  std::vector<bool> inside(g.num_vertices(), false);
  for (Vertex v : m) inside[v] = true;
  for (Vertex z = 0; z < g.num_vertices(); ++z) {
    if (inside[z]) continue;
    int hits = 0;
    for (Vertex v : m) hits += g.HasEdge(z, v);
    if (hits != 0 && hits != static_cast<int>(m.size())) return false;
  }
  return true;
}

namespace {

// Groups `s` by connectivity in g (complement=false) or in the complement of
// g restricted to s. Groups sorted and ordered by smallest member.
std::vector<VertexSet> Groups(const Graph& g, const VertexSet& s, bool complement) {
  std::vector<int> group(g.num_vertices(), -1);
  std::vector<VertexSet> out;
  for (Vertex root : s) {
    if (group[root] != -1) continue;
    const int id = static_cast<int>(out.size());
    VertexSet members{root};
    group[root] = id;
    for (size_t head = 0; head < members.size(); ++head) {
      Vertex u = members[head];
      for (Vertex w : s) {
        if (group[w] == -1 && w != u && g.HasEdge(u, w) != complement) {
          group[w] = id;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Smallest module of g[s] containing u and v.
VertexSet ModuleClosure(const Graph& g, const VertexSet& s, Vertex u, Vertex v) {
  std::vector<bool> inside(g.num_vertices(), false);
  VertexSet m{u, v};
  inside[u] = inside[v] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (Vertex z : s) {
      if (inside[z]) continue;
      int hits = 0;
      for (Vertex w : m) hits += g.HasEdge(z, w);
      if (hits != 0 && hits != static_cast<int>(m.size())) {
        inside[z] = true;
        m.push_back(z);
        grew = true;
      }
    }
  }
  std::sort(m.begin(), m.end());
  return m;
}

// Maximal proper modules of g[s] when both g[s] and its complement are
// connected: u and v share one iff their module closure is proper.
std::vector<VertexSet> MaximalModules(const Graph& g, const VertexSet& s) {
  std::vector<int> parent(s.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  for (size_t i = 0; i < s.size(); ++i) {
    for (size_t j = i + 1; j < s.size(); ++j) {
      if (find(i) == find(j)) continue;
      if (ModuleClosure(g, s, s[i], s[j]).size() < s.size()) {
        parent[find(j)] = find(i);
      }
    }
  }
  std::vector<VertexSet> by_root(s.size());
  for (size_t i = 0; i < s.size(); ++i) by_root[find(i)].push_back(s[i]);
  std::vector<VertexSet> out;
  for (auto& group : by_root) {
    if (!group.empty()) out.push_back(std::move(group));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int BuildNode(const Graph& g, VertexSet s, ModularDecompositionTree& tree) {
  const int index = static_cast<int>(tree.nodes.size());
  tree.nodes.push_back({});
  std::vector<VertexSet> parts;
  ModuleKind kind;
  if (s.size() == 1) {
    kind = ModuleKind::kLeaf;
  } else if (parts = Groups(g, s, false); parts.size() > 1) {
    kind = ModuleKind::kParallel;
  } else if (parts = Groups(g, s, true); parts.size() > 1) {
    kind = ModuleKind::kSeries;
  } else {
    kind = ModuleKind::kPrime;
    parts = MaximalModules(g, s);
  }
  std::vector<int> children;
  if (kind != ModuleKind::kLeaf) {
    for (VertexSet& part : parts) children.push_back(BuildNode(g, std::move(part), tree));
  }
  ModuleNode& node = tree.nodes[index];
  node.kind = kind;
  node.module = std::move(s);
  node.children = std::move(children);
  return index;
}

}  // namespace

ModularDecompositionTree ModularDecomposition(const Graph& g) {
  ModularDecompositionTree tree;
  if (g.num_vertices() == 0) return tree;
  VertexSet all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  tree.root = BuildNode(g, std::move(all), tree);
  return tree;
}

Graph RepresentativeGraph(const Graph& g, const ModularDecompositionTree& tree,
                          int node) {
  const auto& children = tree.node(node).children;
  std::vector<Edge> edges;
  for (size_t i = 0; i < children.size(); ++i) {
    for (size_t j = i + 1; j < children.size(); ++j) {
      bool adjacent = false;
      for (Vertex u : tree.node(children[i]).module) {
        for (Vertex v : tree.node(children[j]).module) adjacent |= g.HasEdge(u, v);
      }
      if (adjacent) edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return Graph(static_cast<int>(children.size()), edges);
}

bool ValidateDecomposition(const Graph& g, const ModularDecompositionTree& tree,
                           std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (g.num_vertices() == 0) return tree.nodes.empty() || fail("nonempty tree");
  if (tree.root < 0) return fail("missing root");
  VertexSet all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  if (tree.node(tree.root).module != all) return fail("M(root) != V(G)");
  for (size_t i = 0; i < tree.nodes.size(); ++i) {
    const ModuleNode& node = tree.nodes[i];
    const std::string at = "node " + std::to_string(i) + ": ";
    if (node.kind == ModuleKind::kLeaf) {
      if (node.module.size() != 1 || !node.children.empty()) return fail(at + "bad leaf");
      continue;
    }
    if (node.children.size() < 2) return fail(at + "internal node with < 2 children");
    VertexSet leaves;
    for (int c : node.children) {
      const auto& m = tree.node(c).module;
      leaves.insert(leaves.end(), m.begin(), m.end());
    }
    std::sort(leaves.begin(), leaves.end());
    if (leaves != node.module) return fail(at + "children do not partition M(h)");
    if (!IsModule(g, node.module)) return fail(at + "M(h) is not a module");
    // Children of Series/Parallel nodes must be fully joined / fully separated.
    if (node.kind == ModuleKind::kSeries || node.kind == ModuleKind::kParallel) {
      const bool want = node.kind == ModuleKind::kSeries;
      for (size_t a = 0; a < node.children.size(); ++a) {
        for (size_t b = a + 1; b < node.children.size(); ++b) {
          for (Vertex u : tree.node(node.children[a]).module) {
            for (Vertex v : tree.node(node.children[b]).module) {
              if (g.HasEdge(u, v) != want) return fail(at + "children not uniformly joined");
            }
          }
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

bool Recognition::Has(GraphClass c) const {
  return std::find(labels.begin(), labels.end(), c) != labels.end();
}

Recognition Recognize(const Graph& g) {
  Recognition r;
  r.bipartition = RecognizeBipartite(g);
  r.cluster_cliques = RecognizeCluster(g);
  r.split = RecognizeSplit(g);
  r.threshold = RecognizeThreshold(g);
  auto tree = ModularDecomposition(g);
  if (!tree.HasPrimeNode()) r.cotree = std::move(tree);
  if (r.bipartition) r.labels.push_back(GraphClass::kBipartite);
  if (r.cluster_cliques) r.labels.push_back(GraphClass::kCluster);
  if (r.split) r.labels.push_back(GraphClass::kSplit);
  if (r.threshold) r.labels.push_back(GraphClass::kThreshold);
  if (r.cotree) r.labels.push_back(GraphClass::kCograph);
  if (r.labels.empty()) r.labels.push_back(GraphClass::kGeneral);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

using Obstruction = std::optional<std::vector<Vertex>>;
using ObstructionFinder = Obstruction (*)(const Graph&, const std::vector<bool>&);

// First induced P3 over triples a < b < c of surviving vertices.
Obstruction FindP3(const Graph& g, const std::vector<bool>& deleted) {
  const int n = g.num_vertices();
  for (Vertex a = 0; a < n; ++a) {
    if (deleted[a]) continue;
    for (Vertex b = a + 1; b < n; ++b) {
      if (deleted[b]) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (deleted[c]) continue;
        if (g.HasEdge(a, b) + g.HasEdge(a, c) + g.HasEdge(b, c) == 2) {
          return std::vector<Vertex>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

// P4 (3 edges, degrees 1,1,2,2), C4 (4 edges, all degree 2), 2K2 (2 edges,
// all degree 1).
bool IsThresholdObstruction(const Graph& g, const std::array<Vertex, 4>& q) {
  std::array<int, 4> deg{};
  int edges = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (g.HasEdge(q[i], q[j])) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
    }
  }
  const int lo = *std::min_element(deg.begin(), deg.end());
  const int hi = *std::max_element(deg.begin(), deg.end());
  if (edges == 2) return lo == 1 && hi == 1;
  if (edges == 3) return lo == 1 && hi == 2;
  if (edges == 4) return lo == 2 && hi == 2;
  return false;
}

Obstruction FindThresholdObstruction(const Graph& g, const std::vector<bool>& deleted) {
  std::vector<Vertex> alive;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!deleted[v]) alive.push_back(v);
  }
  const size_t n = alive.size();
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      for (size_t c = b + 1; c < n; ++c) {
        for (size_t d = c + 1; d < n; ++d) {
          std::array<Vertex, 4> q{alive[a], alive[b], alive[c], alive[d]};
          if (IsThresholdObstruction(g, q)) return std::vector<Vertex>(q.begin(), q.end());
        }
      }
    }
  }
  return std::nullopt;
}

void Branch(const Graph& g, ObstructionFinder find, int budget,
            std::vector<bool>& deleted, VertexSet& chosen,
            std::vector<VertexSet>& solutions) {
  Obstruction hit = find(g, deleted);
  if (!hit) {
    VertexSet s = chosen;
    std::sort(s.begin(), s.end());
    solutions.push_back(std::move(s));
    return;
  }
  if (budget == 0) return;
  for (Vertex v : *hit) {
    deleted[v] = true;
    chosen.push_back(v);
    Branch(g, find, budget - 1, deleted, chosen, solutions);
    chosen.pop_back();
    deleted[v] = false;
  }
}

std::optional<Modulator> SmallestModulator(const Graph& g, int budget,
                                           ObstructionFinder find, ResidualClass cls) {
  if (budget < 0) throw InvalidArgument("modulator budget must be non-negative");
  std::vector<bool> deleted(g.num_vertices(), false);
  VertexSet chosen;
  // Iterative deepening: the first depth with any hit is the minimum size, and
  // exhaustive branching at that depth reaches every minimum solution.
  for (int depth = 0; depth <= budget; ++depth) {
    std::vector<VertexSet> solutions;
    Branch(g, find, depth, deleted, chosen, solutions);
    if (!solutions.empty()) {
      return Modulator{*std::min_element(solutions.begin(), solutions.end()), cls};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Modulator> ClusterModulator(const Graph& g, int budget) {
  return SmallestModulator(g, budget, &FindP3, ResidualClass::kCluster);
}

std::optional<Modulator> ThresholdModulator(const Graph& g, int budget) {
  return SmallestModulator(g, budget, &FindThresholdObstruction,
                           ResidualClass::kThreshold);
}

InducedSubgraph Residual(const Graph& g, const Modulator& m) {
  std::vector<bool> in_x(g.num_vertices(), false);
  for (Vertex x : m.deleted) {
    if (!g.IsValidVertex(x)) throw InvalidArgument("modulator vertex out of range");
    in_x[x] = true;
  }
  VertexSet rest;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!in_x[v]) rest.push_back(v);
  }
  return Induce(g, rest);
}

bool IsValidModulator(const Graph& g, const Modulator& m) {
  VertexSet sorted = m.deleted;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Vertex x : sorted) {
    if (!g.IsValidVertex(x)) return false;
  }
  const Graph rest = Residual(g, m).graph;
  return m.residual_class == ResidualClass::kCluster
             ? RecognizeCluster(rest).has_value()
             : RecognizeThreshold(rest).has_value();
}

}  // namespace cfc
