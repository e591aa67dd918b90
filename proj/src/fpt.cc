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

#include "cfc/fpt.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cfc/error.h"
#include "cfc/oracle.h"

namespace cfc {

uint32_t ModulatorMask(const Graph& g, const VertexSet& sorted_x, Vertex v) {
  uint32_t mask = 0;
  for (size_t i = 0; i < sorted_x.size(); ++i) {
    if (g.HasEdge(v, sorted_x[i])) mask |= uint32_t{1} << i;
  }
  return mask;
}

TypeTable ComputeTypes(const Graph& g, const Modulator& m) {
  if (m.residual_class != ResidualClass::kCluster || !IsValidModulator(g, m)) {
    throw InvalidArgument("not a cluster modulator of this graph");
  }
  if (m.size() > kMaxTypeModulator) {
    throw InvalidArgument("modulator has " + std::to_string(m.size()) +
                          " vertices; types support at most " +
                          std::to_string(kMaxTypeModulator));
  }
  TypeTable table;
  table.modulator = m.deleted;
  const InducedSubgraph rest = Residual(g, m);
  for (const VertexSet& local : ConnectedComponents(rest.graph)) {
    CliqueTypes c;
    for (Vertex v : local) c.clique.push_back(rest.new_to_old[v]);
    std::sort(c.clique.begin(), c.clique.end());
    std::map<uint32_t, VertexSet> by_mask;
    for (Vertex v : c.clique) by_mask[ModulatorMask(g, table.modulator, v)].push_back(v);
    c.types.assign(by_mask.begin(), by_mask.end());
    table.cliques.push_back(std::move(c));
  }
  std::sort(table.cliques.begin(), table.cliques.end(),
            [](const CliqueTypes& a, const CliqueTypes& b) { return a.rep() < b.rep(); });
  return table;
}

std::vector<int> MegaTypeVector(const CliqueTypes& c, int d, int cap) {
  if (d < 0 || d > 16) throw InvalidArgument("dense type vectors need 0 <= d <= 16");
  std::vector<int> out(size_t{1} << d, 0);
  for (const auto& [mask, members] : c.types) {
    out[mask] = std::min(static_cast<int>(members.size()), cap);
  }
  return out;
}

int TypeCap(Variant variant, int k) { return variant == Variant::kClosed ? k + 1 : 2 * k + 1; }

double KernelSizeBound(int d, int k, Variant variant) {
  const double types = std::ldexp(1.0, d);
  return d + std::pow(k + 2.0, types) * (d + 1) * types * TypeCap(variant, k);
}

std::string KernelInstance::WriteProvenance() const {
  std::ostringstream out;
  for (const DeletedVertex& dv : deleted_vertices) {
    out << "dv " << dv.vertex << ' ' << dv.clique_rep << ' ' << dv.mask << '\n';
  }
  for (const DeletedClique& dc : deleted_cliques) {
    out << "dc " << dc.clique_rep << ' ' << dc.survivor_rep << '\n';
  }
  return out.str();
}

namespace {

bool HasIsolatedVertex(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.Degree(v) == 0) return true;
  }
  return false;
}

SolveOutcome Lemma1(const Graph& g, const Modulator& m, Variant variant) {
  return variant == Variant::kClosed ? Lemma1Cfcn(g, m) : Lemma1Cfon(g, m);
}

// Mega-type key: the (mask, count) pairs of a Rule-1-reduced clique.
std::vector<std::pair<uint32_t, int>> MegaKey(const CliqueTypes& c) {
  std::vector<std::pair<uint32_t, int>> key;
  for (const auto& [mask, members] : c.types) {
    key.emplace_back(mask, static_cast<int>(members.size()));
  }
  return key;
}

}  // namespace

KernelInstance Reduce(const Graph& g, const Modulator& m, Variant variant, int k) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  if (variant == Variant::kOpen && HasIsolatedVertex(g)) {
    throw InvalidArgument("graph has an isolated vertex; no CF-ON coloring exists");
  }
  TypeTable table = ComputeTypes(g, m);
  const int d = m.size();

  KernelInstance inst;
  inst.variant = variant;
  inst.k = k;
  inst.modulator = m;
  inst.cap = TypeCap(variant, k);
  inst.size_bound = KernelSizeBound(d, k, variant);
  if (variant == Variant::kClosed) {
    inst.short_circuit = k >= d + 2;
  } else {
    // The isolated-clique corner of Lemma1Cfon can exceed 2d+2, so the
    // construction itself has to fit.
    inst.short_circuit = k >= 2 * d + 2 && Lemma1(g, m, variant).colors_used <= k;
  }

  // Rule 1.
  for (CliqueTypes& c : table.cliques) {
    VertexSet kept;
    for (auto& [mask, members] : c.types) {
      if (static_cast<int>(members.size()) > inst.cap) {
        for (size_t i = inst.cap; i < members.size(); ++i) {
          inst.deleted_vertices.push_back({members[i], c.rep(), mask});
        }
        members.resize(inst.cap);
      }
      kept.insert(kept.end(), members.begin(), members.end());
    }
    std::sort(kept.begin(), kept.end());
    c.clique = std::move(kept);
  }

  // Rule 2.
  std::map<std::vector<std::pair<uint32_t, int>>, int> group_of;
  std::vector<std::vector<int>> groups;
  VertexSet keep = m.deleted;
  for (size_t i = 0; i < table.cliques.size(); ++i) {
    auto [it, fresh] = group_of.try_emplace(MegaKey(table.cliques[i]),
                                            static_cast<int>(groups.size()));
    if (fresh) groups.emplace_back();
    auto& group = groups[it->second];
    inst.mega_type.push_back(it->second);
    if (static_cast<int>(group.size()) <= d) {
      keep.insert(keep.end(), table.cliques[i].clique.begin(), table.cliques[i].clique.end());
    } else {
      inst.deleted_cliques.push_back(
          {table.cliques[i].rep(), table.cliques[group.front()].rep()});
    }
    group.push_back(static_cast<int>(i));
  }
  std::sort(keep.begin(), keep.end());
  inst.reduced_cliques = std::move(table.cliques);

  InducedSubgraph sub = Induce(g, keep);
  inst.kernel = std::move(sub.graph);
  inst.kernel_to_original = std::move(sub.new_to_old);
  inst.original_to_kernel = std::move(sub.old_to_new);
  if (inst.kernel.num_vertices() > inst.size_bound) {
    throw std::logic_error("kernel exceeds its size bound");
  }
  return inst;
}

KernelInstance ReduceCfcn(const Graph& g, const Modulator& m, int k) {
  return Reduce(g, m, Variant::kClosed, k);
}

KernelInstance ReduceCfon(const Graph& g, const Modulator& m, int k) {
  return Reduce(g, m, Variant::kOpen, k);
}

Coloring LiftColoring(const Graph& g, const KernelInstance& inst,
                      const Coloring& kernel_coloring) {
  if (kernel_coloring.num_vertices() != inst.kernel.num_vertices() ||
      !Verify(inst.kernel, kernel_coloring, inst.variant).valid) {
    throw InvalidArgument("kernel coloring is not conflict-free");
  }
  if (kernel_coloring.NumColors() > inst.k) {
    throw InvalidArgument("kernel coloring uses more than k colors");
  }
  const bool closed = inst.variant == Variant::kClosed;
  const int n = g.num_vertices();
  std::vector<Color> colors(n, -1);
  for (int i = 0; i < inst.kernel.num_vertices(); ++i) {
    colors[inst.kernel_to_original[i]] = kernel_coloring[i];
  }

  std::map<Vertex, int> clique_index;
  std::vector<int> clique_of(n, -1);
  for (size_t i = 0; i < inst.reduced_cliques.size(); ++i) {
    clique_index[inst.reduced_cliques[i].rep()] = static_cast<int>(i);
    for (Vertex v : inst.reduced_cliques[i].clique) clique_of[v] = static_cast<int>(i);
  }

  // Undo Rule 2. Every modulator vertex marks the clique holding the first
  // (ascending id) uniquely colored vertex of its neighborhood; a deleted
  // clique copies an unmarked kept clique of its mega-type.
  if (!inst.deleted_cliques.empty()) {
    std::vector<bool> marked(inst.reduced_cliques.size(), false);
    for (Vertex x : inst.modulator.deleted) {
      std::vector<Vertex> nbhd;
      for (Vertex w : g.Neighbors(x)) {
        if (colors[w] >= 0) nbhd.push_back(w);
      }
      if (closed) nbhd.insert(std::upper_bound(nbhd.begin(), nbhd.end(), x), x);
      std::map<Color, int> count;
      for (Vertex w : nbhd) ++count[colors[w]];
      for (Vertex w : nbhd) {
        if (count[colors[w]] == 1) {
          if (clique_of[w] >= 0) marked[clique_of[w]] = true;
          break;
        }
      }
    }
    std::vector<bool> deleted(inst.reduced_cliques.size(), false);
    for (const DeletedClique& dc : inst.deleted_cliques) deleted[clique_index.at(dc.clique_rep)] = true;
    for (const DeletedClique& dc : inst.deleted_cliques) {
      const int target = clique_index.at(dc.clique_rep);
      int source = -1;
      for (size_t i = 0; i < inst.reduced_cliques.size(); ++i) {
        if (!deleted[i] && !marked[i] && inst.mega_type[i] == inst.mega_type[target]) {
          source = static_cast<int>(i);
          break;
        }
      }
      if (source < 0) throw std::logic_error("no unmarked clique in mega-type");
      const auto& from = inst.reduced_cliques[source].types;
      const auto& to = inst.reduced_cliques[target].types;
      for (size_t t = 0; t < to.size(); ++t) {
        for (size_t j = 0; j < to[t].second.size(); ++j) {
          colors[to[t].second[j]] = colors[from[t].second[j]];
        }
      }
    }
  }

  // Undo Rule 1: a full type with at most k colors repeats some color
  // (twice for CF-CN, three times for CF-ON); deleted members take it.
  const int need = closed ? 2 : 3;
  std::map<std::pair<int, uint32_t>, Color> repeated;
  for (const DeletedVertex& dv : inst.deleted_vertices) {
    const int ci = clique_index.at(dv.clique_rep);
    auto [it, fresh] = repeated.try_emplace({ci, dv.mask}, -1);
    if (fresh) {
      const auto& types = inst.reduced_cliques[ci].types;
      auto type = std::find_if(types.begin(), types.end(),
                               [&](const auto& t) { return t.first == dv.mask; });
      std::map<Color, int> count;
      for (Vertex w : type->second) ++count[colors[w]];
      for (const auto& [color, times] : count) {
        if (times >= need) {
          it->second = color;
          break;
        }
      }
      if (it->second < 0) throw std::logic_error("full type without a repeated color");
    }
    colors[dv.vertex] = it->second;
  }
  return Coloring(std::move(colors));
}

KernelDecision SolveViaKernel(const Graph& g, const Modulator& m, Variant variant, int k,
                              const KernelSolveOptions& options) {
  KernelDecision decision;
  if (k < 1) throw InvalidArgument("k must be at least 1");
  if (variant == Variant::kOpen && HasIsolatedVertex(g)) {
    decision.infeasible = true;
    return decision;
  }
  const KernelInstance inst = Reduce(g, m, variant, k);
  decision.kernel_vertices = inst.kernel.num_vertices();
  decision.short_circuit = inst.short_circuit;
  if (inst.short_circuit) {
    decision.yes = true;
    decision.coloring = Lemma1(g, m, variant).coloring;
    return decision;
  }
  if (inst.kernel.num_vertices() > options.kernel_vertex_limit) {
    std::ostringstream msg;
    msg << "kernel has " << inst.kernel.num_vertices() << " vertices (bound "
        << inst.size_bound << "), above the oracle limit " << options.kernel_vertex_limit;
    throw SizeGuardError(msg.str());
  }
  OracleOptions oracle;
  oracle.vertex_limit = options.kernel_vertex_limit;
  const std::optional<Coloring> kc = DecideCf(inst.kernel, variant, k, oracle);
  if (!kc) return decision;
  decision.yes = true;
  decision.coloring = LiftColoring(g, inst, *kc);
  return decision;
}

SolveOutcome SolveFpt(const Graph& g, const Modulator& m, Variant variant,
                      const KernelSolveOptions& options) {
  for (int k = 1;; ++k) {
    KernelDecision decision = SolveViaKernel(g, m, variant, k, options);
    if (decision.infeasible) {
      throw InvalidArgument("graph has an isolated vertex; no CF-ON coloring exists");
    }
    if (decision.yes) return MakeOutcome(std::move(*decision.coloring), Optimality::kExact);
  }
}

// ---------------------------------------------------------------------------

namespace {

ApproxOutcome ApproxThreshold(const Graph& g, const Modulator& m, Variant variant,
                              const ApproxOptions& options) {
  if (m.residual_class != ResidualClass::kThreshold || !IsValidModulator(g, m)) {
    throw InvalidArgument("not a threshold modulator of this graph");
  }
  if (m.size() > kMaxTypeModulator) throw InvalidArgument("modulator too large");
  const bool closed = variant == Variant::kClosed;
  if (!closed && HasIsolatedVertex(g)) {
    throw InvalidArgument("graph has an isolated vertex; no CF-ON coloring exists");
  }
  const int n = g.num_vertices();
  const VertexSet& x = m.deleted;
  std::vector<bool> in_x(n, false);
  for (Vertex v : x) in_x[v] = true;

  const InducedSubgraph rest = Residual(g, m);
  const auto components = ConnectedComponents(rest.graph);
  std::optional<VertexSet> nontrivial;
  for (const VertexSet& comp : components) {
    if (comp.size() >= 2) nontrivial = comp;  // threshold graphs have at most one
  }

  // Vertices of N(X) - X grouped by (mask, constrained). A residual vertex
  // with no residual neighbor has its whole neighborhood inside H, so its
  // own neighborhood is constrained too.
  std::map<std::pair<uint32_t, bool>, VertexSet> types;
  for (Vertex v = 0; v < n; ++v) {
    if (in_x[v]) continue;
    const uint32_t mask = ModulatorMask(g, x, v);
    if (mask == 0) continue;
    const bool constrained = rest.graph.Degree(rest.old_to_new[v]) == 0;
    types[{mask, constrained}].push_back(v);
  }

  std::vector<Color> colors(n, 0);
  int lower_bound = 0;
  if (!x.empty()) {
    for (int k = 1;; ++k) {
      VertexSet h = x;
      std::vector<std::pair<Vertex, const VertexSet*>> overflow;  // deleted vertex, its type
      VertexSet constrained;
      for (const auto& [key, members] : types) {
        for (size_t i = 0; i < members.size(); ++i) {
          if (static_cast<int>(i) <= k) {
            h.push_back(members[i]);
            if (key.second) constrained.push_back(members[i]);
          } else {
            overflow.push_back({members[i], &members});
          }
        }
      }
      std::sort(h.begin(), h.end());
      if (static_cast<int>(h.size()) > options.partial_vertex_limit) {
        throw SizeGuardError("partial instance has " + std::to_string(h.size()) +
                             " vertices, above the limit " +
                             std::to_string(options.partial_vertex_limit));
      }
      std::vector<int> local(n, -1);
      for (size_t i = 0; i < h.size(); ++i) local[h[i]] = static_cast<int>(i);
      std::vector<VertexSet> hyperedges;
      auto add_edge = [&](Vertex center) {
        VertexSet e;
        if (closed) e.push_back(local[center]);
        for (Vertex w : g.Neighbors(center)) {
          if (local[w] >= 0) e.push_back(local[w]);
        }
        std::sort(e.begin(), e.end());
        hyperedges.push_back(std::move(e));
      };
      for (Vertex v : x) add_edge(v);
      for (Vertex z : constrained) add_edge(z);
      const std::optional<Coloring> partial =
          FindConflictFreeColoring(static_cast<int>(h.size()), hyperedges, k);
      if (!partial) continue;
      lower_bound = k;
      for (size_t i = 0; i < h.size(); ++i) colors[h[i]] = (*partial)[i];
      for (const auto& [v, members] : overflow) {
        std::map<Color, int> count;
        for (int i = 0; i <= k; ++i) ++count[colors[(*members)[i]]];
        auto it = std::find_if(count.begin(), count.end(),
                               [](const auto& entry) { return entry.second >= 2; });
        colors[v] = it->first;
      }
      break;
    }
  }

  std::string note;
  if (nontrivial) {
    const int size = static_cast<int>(nontrivial->size());
    Vertex u = -1;
    for (Vertex v : *nontrivial) {
      if (rest.graph.Degree(v) == size - 1) {
        u = rest.new_to_old[v];
        break;
      }
    }
    if (u < 0) throw std::logic_error("threshold component without a universal vertex");
    const Color fresh = std::max(lower_bound, 1);
    colors[u] = fresh;
    if (!closed) {
      const Vertex t = rest.new_to_old[(*nontrivial)[0]] == u ? (*nontrivial)[1]
                                                             : (*nontrivial)[0];
      colors[rest.new_to_old[t]] = fresh + 1;
    }
    if (components.size() > 1) {
      note = "residual is disconnected; fresh colors go to its only nontrivial component";
    }
  }
  ApproxOutcome out;
  out.outcome = MakeOutcome(Coloring(std::move(colors)), Optimality::kUpperBound, note);
  // Any nonempty graph needs at least one color.
  out.lower_bound = n > 0 ? std::max(lower_bound, 1) : 0;
  return out;
}

}  // namespace

ApproxOutcome ApproxCfcnThreshold(const Graph& g, const Modulator& m,
                                  const ApproxOptions& options) {
  return ApproxThreshold(g, m, Variant::kClosed, options);
}

ApproxOutcome ApproxCfonThreshold(const Graph& g, const Modulator& m,
                                  const ApproxOptions& options) {
  return ApproxThreshold(g, m, Variant::kOpen, options);
}

}  // namespace cfc
