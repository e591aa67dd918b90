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

#include "cfc/generators.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "cfc/error.h"

namespace cfc {

uint64_t Rng::Next() {
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t Rng::Below(uint64_t bound) {
  const uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const uint64_t r = Next();
    if (r >= threshold) return r % bound;
  }
}

int Rng::Between(int lo, int hi) {
  return lo + static_cast<int>(Below(static_cast<uint64_t>(hi - lo) + 1));
}

bool Rng::Chance(double p) {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53 < p;
}

namespace {

constexpr std::array<std::pair<GenClass, std::string_view>, 9> kGenClassNames{{
    {GenClass::kRandom, "random"},
    {GenClass::kCluster, "cluster"},
    {GenClass::kClusterModulator, "cluster-modulator"},
    {GenClass::kSplit, "split"},
    {GenClass::kThreshold, "threshold"},
    {GenClass::kThresholdModulator, "threshold-modulator"},
    {GenClass::kCograph, "cograph"},
    {GenClass::kBipartite, "bipartite"},
    {GenClass::kInterval, "interval"},
}};

}  // namespace

std::string_view GenClassName(GenClass c) {
  for (const auto& [cls, name] : kGenClassNames) {
    if (cls == c) return name;
  }
  return "?";
}

std::optional<GenClass> ParseGenClass(std::string_view name) {
  for (const auto& [cls, n] : kGenClassNames) {
    if (n == name) return cls;
  }
  return std::nullopt;
}

namespace {

// Applies a random relabeling to a generated instance and all certificates.
void Relabel(Generated& out, Rng& rng) {
  const int n = out.graph.num_vertices();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.Shuffle(perm);
  std::vector<Edge> edges;
  for (const Edge& e : out.graph.Edges()) {
    edges.push_back({std::min(perm[e.u], perm[e.v]), std::max(perm[e.u], perm[e.v])});
  }
  out.graph = Graph(n, edges);
  auto map_set = [&](VertexSet& s) {
    for (Vertex& v : s) v = perm[v];
    std::sort(s.begin(), s.end());
  };
  if (out.split) {
    map_set(out.split->clique);
    map_set(out.split->independent);
  }
  if (out.modulator) map_set(out.modulator->deleted);
  if (out.bipartition) {
    map_set(out.bipartition->a);
    map_set(out.bipartition->b);
  }
  if (out.threshold) {
    for (auto& step : *out.threshold) step.vertex = perm[step.vertex];
  }
  if (out.intervals) {
    IntervalRepresentation rep(n);
    for (int v = 0; v < n; ++v) rep[perm[v]] = (*out.intervals)[v];
    out.intervals = std::move(rep);
  }
}

// Random composition of `total` into parts, each at most max_part.
std::vector<int> RandomParts(Rng& rng, int total, int max_part) {
  std::vector<int> parts;
  while (total > 0) {
    int size = rng.Between(1, std::min(total, std::max(1, max_part)));
    parts.push_back(size);
    total -= size;
  }
  return parts;
}

Generated GenCluster(const GenSpec& spec, Rng& rng, int d) {
  std::vector<int> sizes = spec.clique_sizes;
  const int body = spec.clique_sizes.empty() ? spec.n - d : 0;
  if (sizes.empty()) {
    if (body < 0) throw InvalidArgument("modulator larger than n");
    sizes = RandomParts(rng, body, std::max(1, body / 2 + 1));
  }
  // Per-clique modulator neighborhoods are drawn from few masks and cliques
  // are sometimes copies of the previous one, so equal types and mega-types
  // actually occur.
  std::vector<Edge> edges;
  std::vector<uint32_t> masks;
  int next = 0;
  std::vector<std::pair<int, int>> cliques;  // first vertex, size
  for (size_t c = 0; c < sizes.size(); ++c) {
    const int first = next;
    const bool copy = c > 0 && sizes[c] == sizes[c - 1] && rng.Chance(0.5);
    for (int i = 0; i < sizes[c]; ++i) {
      uint32_t mask;
      if (copy) {
        mask = masks[cliques.back().first + i];
      } else if (i > 0 && rng.Chance(0.5)) {
        mask = masks.back();
      } else {
        mask = static_cast<uint32_t>(rng.Below(uint64_t{1} << d));
      }
      masks.push_back(mask);
      for (int j = first; j < next; ++j) edges.push_back({j, next});
      ++next;
    }
    cliques.push_back({first, sizes[c]});
  }
  const int body_n = next;
  Modulator m{{}, ResidualClass::kCluster};
  for (int i = 0; i < d; ++i) m.deleted.push_back(body_n + i);
  for (int v = 0; v < body_n; ++v) {
    for (int i = 0; i < d; ++i) {
      if (masks[v] >> i & 1) edges.push_back({v, body_n + i});
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (rng.Chance(spec.edge_probability)) edges.push_back({body_n + i, body_n + j});
    }
  }
  Generated out;
  out.graph = Graph(body_n + d, edges);
  out.modulator = std::move(m);
  return out;
}

ThresholdOrder RandomCreation(Rng& rng, int n, double p, bool connected) {
  // Creation sequence; stored reversed as an elimination order.
  ThresholdOrder creation;
  for (int v = 0; v < n; ++v) {
    bool universal = v > 0 && rng.Chance(p);
    if (connected && v == n - 1 && n > 1) universal = true;
    creation.push_back({v, universal});
  }
  std::reverse(creation.begin(), creation.end());
  return creation;
}

Graph BuildThreshold(int n, const ThresholdOrder& elimination) {
  std::vector<Edge> edges;
  std::vector<Vertex> present;
  for (auto it = elimination.rbegin(); it != elimination.rend(); ++it) {
    if (it->universal) {
      for (Vertex w : present) edges.push_back({std::min(w, it->vertex), std::max(w, it->vertex)});
    }
    present.push_back(it->vertex);
  }
  return Graph(n, edges);
}

void AddModulatorEdges(Rng& rng, int body_n, int d, double p, std::vector<Edge>& edges) {
  for (int i = 0; i < d; ++i) {
    const Vertex x = body_n + i;
    for (Vertex v = 0; v < x; ++v) {
      if (rng.Chance(p)) edges.push_back({v, x});
    }
  }
}

void BuildCograph(Rng& rng, const std::vector<Vertex>& vs, bool series,
                  std::vector<Edge>& edges) {
  if (vs.size() <= 1) return;
  std::vector<int> parts = RandomParts(rng, static_cast<int>(vs.size()),
                                       static_cast<int>(vs.size()) - 1);
  size_t at = 0;
  std::vector<std::vector<Vertex>> groups;
  for (int size : parts) {
    groups.emplace_back(vs.begin() + at, vs.begin() + at + size);
    at += size;
  }
  for (const auto& group : groups) BuildCograph(rng, group, !series, edges);
  if (series) {
    for (size_t a = 0; a < groups.size(); ++a) {
      for (size_t b = a + 1; b < groups.size(); ++b) {
        for (Vertex u : groups[a]) {
          for (Vertex v : groups[b]) edges.push_back({std::min(u, v), std::max(u, v)});
        }
      }
    }
  }
}

// Sweeps 2n slots; each slot opens a new interval or closes a random open
// one. Keeping at least one interval open until all are opened makes the
// union contiguous, hence the graph connected.
IntervalRepresentation RandomIntervals(Rng& rng, int n) {
  IntervalRepresentation rep(n);
  std::vector<Vertex> open;
  int opened = 0;
  for (int slot = 0; slot < 2 * n; ++slot) {
    const Rational at(4 * slot + static_cast<int64_t>(rng.Below(2)), 2);
    const bool can_open = opened < n;
    const bool can_close = open.size() > 1 || (!open.empty() && opened == n);
    if (can_open && (!can_close || rng.Chance(0.5))) {
      rep[opened].left = at;
      open.push_back(opened++);
    } else {
      const size_t pick = rng.Below(open.size());
      rep[open[pick]].right = at;
      open.erase(open.begin() + pick);
    }
  }
  return rep;
}

Generated GenerateOnce(const GenSpec& spec, Rng& rng) {
  const int n = spec.n;
  const double p = spec.edge_probability;
  Generated out;
  switch (spec.cls) {
    case GenClass::kRandom: {
      std::vector<Edge> edges;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (rng.Chance(p)) edges.push_back({u, v});
        }
      }
      out.graph = Graph(n, edges);
      break;
    }
    case GenClass::kCluster:
      out = GenCluster(spec, rng, 0);
      break;
    case GenClass::kClusterModulator:
      out = GenCluster(spec, rng, spec.d);
      break;
    case GenClass::kSplit: {
      const int c = rng.Between(n > 0 ? 1 : 0, n);
      std::vector<Edge> edges;
      SplitPartition part;
      for (int u = 0; u < c; ++u) {
        part.clique.push_back(u);
        for (int v = u + 1; v < c; ++v) edges.push_back({u, v});
      }
      for (int i = c; i < n; ++i) {
        part.independent.push_back(i);
        for (int u = 0; u < c; ++u) {
          if (rng.Chance(p)) edges.push_back({u, i});
        }
      }
      out.graph = Graph(n, edges);
      out.split = RecognizeSplit(out.graph);  // canonical maximum-clique side
      break;
    }
    case GenClass::kThreshold: {
      out.threshold = RandomCreation(rng, n, p, spec.connected);
      out.graph = BuildThreshold(n, *out.threshold);
      break;
    }
    case GenClass::kThresholdModulator: {
      const int body = n - spec.d;
      if (body < 0) throw InvalidArgument("modulator larger than n");
      ThresholdOrder order = RandomCreation(rng, body, p, false);
      std::vector<Edge> edges = BuildThreshold(body, order).Edges();
      AddModulatorEdges(rng, body, spec.d, p, edges);
      out.graph = Graph(n, edges);
      Modulator m{{}, ResidualClass::kThreshold};
      for (int i = 0; i < spec.d; ++i) m.deleted.push_back(body + i);
      out.modulator = std::move(m);
      break;
    }
    case GenClass::kCograph: {
      std::vector<Vertex> vs(n);
      std::iota(vs.begin(), vs.end(), 0);
      std::vector<Edge> edges;
      BuildCograph(rng, vs, spec.connected || rng.Chance(0.5), edges);
      out.graph = Graph(n, edges);
      break;
    }
    case GenClass::kBipartite: {
      const int a = rng.Between(n > 0 ? 1 : 0, std::max(n - 1, n > 0 ? 1 : 0));
      std::vector<Edge> edges;
      Bipartition bp;
      for (int v = 0; v < n; ++v) (v < a ? bp.a : bp.b).push_back(v);
      for (int u = 0; u < a; ++u) {
        for (int v = a; v < n; ++v) {
          if (rng.Chance(p)) edges.push_back({u, v});
        }
      }
      out.graph = Graph(n, edges);
      out.bipartition = std::move(bp);
      break;
    }
    case GenClass::kInterval: {
      out.intervals = RandomIntervals(rng, n);
      out.graph = IntervalGraph(*out.intervals);
      break;
    }
  }
  Relabel(out, rng);
  return out;
}

}  // namespace

Generated Generate(const GenSpec& spec) {
  if (spec.n < 0 || spec.d < 0) throw InvalidArgument("negative size");
  if (spec.d > 20) throw InvalidArgument("modulator size above 20 is not supported");
  const bool modulated = spec.cls == GenClass::kClusterModulator ||
                         spec.cls == GenClass::kThresholdModulator;
  if (!modulated && spec.d != 0) {
    throw InvalidArgument("--d only applies to modulator classes");
  }
  if (!spec.clique_sizes.empty() && spec.cls != GenClass::kCluster &&
      spec.cls != GenClass::kClusterModulator) {
    throw InvalidArgument("clique sizes only apply to cluster classes");
  }
  for (int s : spec.clique_sizes) {
    if (s < 1) throw InvalidArgument("clique sizes must be positive");
  }
  if (spec.edge_probability < 0 || spec.edge_probability > 1) {
    throw InvalidArgument("edge probability outside [0, 1]");
  }
  if (spec.connected && spec.cls == GenClass::kCluster && spec.n > 1 &&
      spec.clique_sizes.size() != 1) {
    // A cluster graph is connected only when it is one clique; resampling
    // would never terminate for explicit multi-clique shapes.
    if (!spec.clique_sizes.empty()) {
      throw InvalidArgument("connected cluster graph needs a single clique");
    }
  }
  Rng rng(spec.seed);
  constexpr int kAttempts = 10000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Generated out = GenerateOnce(spec, rng);
    if (!spec.connected || IsConnected(out.graph)) return out;
  }
  throw InvalidArgument("could not sample a connected instance for this spec");
}

// ---------------------------------------------------------------------------

namespace {

// Iterated degree refinement; returns a color per vertex, isomorphism
// invariant.
std::vector<int> RefineColors(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.Degree(v);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (Vertex w : g.Neighbors(v)) sig[v].second.push_back(color[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                 sorted.begin());
    }
    const bool stable = std::set<int>(next.begin(), next.end()).size() ==
                        std::set<int>(color.begin(), color.end()).size();
    color = std::move(next);
    if (stable) break;
  }
  return color;
}

void SearchOrders(const Graph& g, std::vector<std::vector<Vertex>>& blocks, size_t block,
                  std::vector<Vertex>& order, std::vector<bool>& best) {
  if (block == blocks.size()) {
    const int n = g.num_vertices();
    std::vector<bool> bits;
    bits.reserve(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) bits.push_back(g.HasEdge(order[i], order[j]));
    }
    if (best.empty() || bits > best) best = std::move(bits);
    return;
  }
  auto& members = blocks[block];
  std::sort(members.begin(), members.end());
  do {
    const size_t base = order.size();
    order.insert(order.end(), members.begin(), members.end());
    SearchOrders(g, blocks, block + 1, order, best);
    order.resize(base);
  } while (std::next_permutation(members.begin(), members.end()));
}

}  // namespace

std::vector<bool> CanonicalForm(const Graph& g) {
  const int n = g.num_vertices();
  const std::vector<int> color = RefineColors(g);
  const int classes = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::vector<Vertex>> blocks(classes);
  for (int v = 0; v < n; ++v) blocks[color[v]].push_back(v);
  std::vector<Vertex> order;
  std::vector<bool> best;
  SearchOrders(g, blocks, 0, order, best);
  // Prefix the vertex count so forms of different orders never collide.
  std::vector<bool> out;
  for (int bit = 0; bit < 8; ++bit) out.push_back(n >> bit & 1);
  out.insert(out.end(), best.begin(), best.end());
  return out;
}

std::vector<Graph> EnumerateConnected(int max_n,
                                      const std::function<bool(const Graph&)>& filter) {
  std::vector<Graph> out;
  std::vector<Graph> level{Graph(1)};  // all graphs on k vertices up to iso
  for (int k = 2; k <= max_n; ++k) {
    std::set<std::vector<bool>> seen;
    std::vector<Graph> next;
    for (const Graph& h : level) {
      const std::vector<Edge> base = h.Edges();
      for (uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        std::vector<Edge> edges = base;
        for (int u = 0; u < k - 1; ++u) {
          if (mask >> u & 1) edges.push_back({u, k - 1});
        }
        Graph g(k, edges);
        if (seen.insert(CanonicalForm(g)).second) next.push_back(std::move(g));
      }
    }
    for (const Graph& g : next) {
      if (IsConnected(g) && (!filter || filter(g))) out.push_back(g);
    }
    level = std::move(next);
  }
  return out;
}

std::vector<Graph> EnumerateSmall(int max_n,
                                  const std::function<bool(const Graph&)>& filter) {
  if (max_n > 7) throw InvalidArgument("enumeration is limited to n <= 7");
  return EnumerateConnected(max_n, filter);
}

std::vector<Graph> EnumerateSplit(int n) {
  std::vector<Graph> out;
  if (n < 2) return out;
  std::set<std::vector<bool>> seen;
  for (int c = 1; c <= n; ++c) {
    const int rest = n - c;
    const uint32_t top = (1u << c) - 1;  // nonzero masks only: no isolated vertex
    std::vector<uint32_t> masks(rest, 1);
    while (true) {
      std::vector<Edge> edges;
      for (int u = 0; u < c; ++u) {
        for (int v = u + 1; v < c; ++v) edges.push_back({u, v});
      }
      for (int i = 0; i < rest; ++i) {
        for (int u = 0; u < c; ++u) {
          if (masks[i] >> u & 1) edges.push_back({u, c + i});
        }
      }
      Graph g(n, edges);
      if (IsConnected(g) && seen.insert(CanonicalForm(g)).second) out.push_back(std::move(g));
      // Next non-decreasing mask sequence.
      int i = rest - 1;
      while (i >= 0 && masks[i] == top) --i;
      if (i < 0) break;
      ++masks[i];
      for (int j = i + 1; j < rest; ++j) masks[j] = masks[i];
    }
  }
  return out;
}

}  // namespace cfc
