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

#include "cfc/interval.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "cfc/error.h"

namespace cfc {

Rational::Rational(int64_t num, int64_t den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::Parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    int64_t v = 0;
    const char* first = s.data();
    if (!s.empty() && s.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw InvalidArgument("bad rational literal '" + std::string(text) + "'");
    }
    return v;
  };
  const size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Graph IntervalGraph(const IntervalRepresentation& rep) {
  std::vector<Edge> edges;
  const int n = static_cast<int>(rep.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rep[u].Intersects(rep[v])) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

RepresentationVerdict ValidateRepresentation(const Graph& g,
                                             const IntervalRepresentation& rep) {
  RepresentationVerdict verdict;
  const int n = g.num_vertices();
  if (static_cast<int>(rep.size()) != n) {
    verdict.reason = "representation has " + std::to_string(rep.size()) +
                     " intervals for " + std::to_string(n) + " vertices";
    return verdict;
  }
  std::vector<Rational> endpoints;
  for (int v = 0; v < n; ++v) {
    if (!(rep[v].left < rep[v].right)) {
      verdict.reason = "interval of vertex " + std::to_string(v) + " has left >= right";
      return verdict;
    }
    endpoints.push_back(rep[v].left);
    endpoints.push_back(rep[v].right);
  }
  std::sort(endpoints.begin(), endpoints.end());
  if (auto dup = std::adjacent_find(endpoints.begin(), endpoints.end());
      dup != endpoints.end()) {
    verdict.reason = "endpoint " + dup->ToString() + " is shared (not distinguishing)";
    return verdict;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rep[u].Intersects(rep[v]) != g.HasEdge(u, v)) {
        verdict.mismatch = Edge{u, v};
        verdict.reason = "pair (" + std::to_string(u) + "," + std::to_string(v) +
                         (g.HasEdge(u, v) ? ") is an edge but intervals are disjoint"
                                          : ") is not an edge but intervals overlap");
        return verdict;
      }
    }
  }
  verdict.valid = true;
  return verdict;
}

IntervalRepresentation ParseIntervals(std::string_view text, int num_vertices) {
  std::vector<std::optional<Interval>> slots(num_vertices);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag, left, right, extra;
    long long v = -1;
    if (!(fields >> tag) || tag == "c") continue;
    if (tag != "i" || !(fields >> v >> left >> right) || (fields >> extra)) {
      throw ParseError(line_no, "expected 'i <vertex> <left> <right>'");
    }
    if (v < 0 || v >= num_vertices) {
      throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
    }
    if (slots[v]) throw ParseError(line_no, "duplicate interval for vertex " + std::to_string(v));
    try {
      slots[v] = Interval{Rational::Parse(left), Rational::Parse(right)};
    } catch (const InvalidArgument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  IntervalRepresentation rep;
  for (int v = 0; v < num_vertices; ++v) {
    if (!slots[v]) throw ParseError(0, "missing interval for vertex " + std::to_string(v));
    rep.push_back(*slots[v]);
  }
  return rep;
}

std::string WriteIntervals(const IntervalRepresentation& rep) {
  std::ostringstream out;
  for (size_t v = 0; v < rep.size(); ++v) {
    out << "i " << v << ' ' << rep[v].left.ToString() << ' ' << rep[v].right.ToString()
        << '\n';
  }
  return out.str();
}

namespace {

class Sweep {
 public:
  Sweep(const Graph& g, const IntervalRepresentation& rep)
      : g_(g), rep_(rep), colors_(g.num_vertices(), kUncolored) {
    const int n = g.num_vertices();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(),
              [&](Vertex a, Vertex b) { return rep[a].left < rep[b].left; });
    rightmost_ = 0;
    for (Vertex v = 1; v < n; ++v) {
      if (rep[rightmost_].right < rep[v].right) rightmost_ = v;
    }
  }

  Coloring Run(bool open) {
    for (Vertex vi : order_) {
      if (colors_[vi] != kUncolored) continue;
      const Rational& li = rep_[vi].left;
      if (vi == rightmost_) {
        if (!open) {
          colors_[vi] = 1;
          ZeroFill({vi}, [&](Vertex w) { return rep_[w].left >= li; });
          continue;
        }
        // Neighbors starting right of l(vi) are exactly the intervals nested
        // inside the rightmost one.
        std::optional<Vertex> inner;
        for (Vertex w : g_.Neighbors(vi)) {
          if (rep_[w].left >= li) {
            inner = w;
            break;
          }
        }
        colors_[vi] = 1;
        if (inner) {
          colors_[*inner] = 2;
          ZeroFill({vi}, [&](Vertex w) { return rep_[w].left >= li; });
        }
        continue;
      }
      const Vertex vl = FurthestReaching(vi);
      if (vl == rightmost_) {
        colors_[vi] = 1;
        colors_[vl] = 2;
        ZeroFill({vi, vl}, [&](Vertex w) { return rep_[w].left >= li; });
        continue;
      }
      const Vertex vl2 = FurthestReaching(vl);
      const Rational& r2 = rep_[vl2].right;
      colors_[vi] = 1;
      colors_[vl] = 2;
      colors_[vl2] = 3;
      ZeroFill({vi, vl, vl2},
               [&](Vertex w) { return rep_[w].right <= r2 && rep_[w].left >= li; });
    }
    return Coloring(colors_);
  }

 private:
  static constexpr Color kUncolored = -1;

  // Neighbor of v whose interval reaches furthest right over N[v]. Only
  // called for non-rightmost v, where connectivity guarantees it exceeds v.
  Vertex FurthestReaching(Vertex v) const {
    Vertex best = v;
    for (Vertex w : g_.Neighbors(v)) {
      if (rep_[best].right < rep_[w].right) best = w;
    }
    if (best == v) throw InvalidArgument("interval graph is not connected");
    return best;
  }

  // Colors 0 every still-uncolored vertex of the union of open neighborhoods
  // of `centers` accepted by `keep`.
  template <typename Pred>
  void ZeroFill(std::initializer_list<Vertex> centers, Pred keep) {
    for (Vertex c : centers) {
      for (Vertex w : g_.Neighbors(c)) {
        if (colors_[w] == kUncolored && keep(w)) colors_[w] = 0;
      }
    }
  }

  const Graph& g_;
  const IntervalRepresentation& rep_;
  std::vector<Color> colors_;
  std::vector<Vertex> order_;
  Vertex rightmost_ = 0;
};

void CheckInput(const Graph& g, const IntervalRepresentation& rep, int min_edges) {
  if (auto verdict = ValidateRepresentation(g, rep); !verdict) {
    throw InvalidArgument("invalid interval representation: " + verdict.reason);
  }
  if (g.num_edges() < min_edges) {
    throw InvalidArgument("graph needs at least " + std::to_string(min_edges) +
                          (min_edges == 1 ? " edge" : " edges"));
  }
  if (!IsConnected(g)) throw InvalidArgument("interval graph is not connected");
}

}  // namespace

SolveOutcome CfcnInterval(const Graph& g, const IntervalRepresentation& rep) {
  CheckInput(g, rep, 1);
  return MakeOutcome(Sweep(g, rep).Run(/*open=*/false), Optimality::kUpperBound);
}

SolveOutcome CfonInterval(const Graph& g, const IntervalRepresentation& rep) {
  CheckInput(g, rep, 2);
  return MakeOutcome(Sweep(g, rep).Run(/*open=*/true), Optimality::kUpperBound);
}

}  // namespace cfc
