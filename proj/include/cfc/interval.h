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

#ifndef CFC_INTERVAL_H_
#define CFC_INTERVAL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfc/graph.h"
#include "cfc/polysolve.h"
#include "cfc/rational.h"

namespace cfc {

struct Interval {
  Rational left;
  Rational right;

  bool Intersects(const Interval& o) const { return left <= o.right && o.left <= right; }
  bool Contains(const Interval& o) const { return left <= o.left && o.right <= right; }
};

// Closed interval per vertex, indexed by vertex id.
using IntervalRepresentation = std::vector<Interval>;

struct RepresentationVerdict {
  bool valid = false;
  std::string reason;
  // First pair (u < v) whose adjacency disagrees with interval overlap.
  std::optional<Edge> mismatch;

  explicit operator bool() const { return valid; }
};

// Accepts iff there is one interval per vertex with left < right, all 2n
// endpoints are distinct, and the intersection graph equals g.
RepresentationVerdict ValidateRepresentation(const Graph& g,
                                             const IntervalRepresentation& rep);

// Intersection graph of the intervals.
Graph IntervalGraph(const IntervalRepresentation& rep);

// Interval file: "i <vertex> <left> <right>" with rational literals such as
// 3, -1, 7/2; "c" comments. Every vertex 0..n-1 exactly once.
IntervalRepresentation ParseIntervals(std::string_view text, int num_vertices);
std::string WriteIntervals(const IntervalRepresentation& rep);

// Left-to-right sweep that colors a connected interval graph with at most
// four colors (0 for the filler, 1-3 for the chosen chain) so that every
// closed neighborhood has a unique color. Requires a distinguishing
// representation and at least one edge.
SolveOutcome CfcnInterval(const Graph& g, const IntervalRepresentation& rep);

// Open-neighborhood counterpart; additionally handles a rightmost interval
// that contains another. Requires at least two edges.
SolveOutcome CfonInterval(const Graph& g, const IntervalRepresentation& rep);

}  // namespace cfc

#endif  // CFC_INTERVAL_H_
