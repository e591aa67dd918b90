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

#ifndef CFC_COLORING_H_
#define CFC_COLORING_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cfc/graph.h"

namespace cfc {

using Color = int;

// Which neighborhood hypergraph a conflict-free coloring targets.
enum class Variant {
  kClosed,  // CF-CN: every N[v] has a unique color
  kOpen,    // CF-ON: every N(v) has a unique color
};

std::string_view VariantName(Variant variant);  // "cn" / "on"

// Total map vertex -> non-negative color. The size of a coloring is the
// number of distinct values used, not max+1.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<Color> colors);

  // All vertices share `color`.
  static Coloring Uniform(int n, Color color);

  int num_vertices() const { return static_cast<int>(colors_.size()); }
  Color operator[](Vertex v) const { return colors_[v]; }
  void Set(Vertex v, Color c);
  std::span<const Color> colors() const { return colors_; }

  int NumColors() const;
  // Sorted distinct colors.
  std::vector<Color> Palette() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
};

// Smallest color occurring exactly once among `s`, if any.
std::optional<Color> UniqueColor(const Coloring& c, std::span<const Vertex> s);

struct Verdict {
  bool valid = false;
  // Smallest-id vertex whose neighborhood lacks a unique color.
  std::optional<Vertex> failing_vertex;
  // Non-empty when the coloring does not even fit the graph.
  std::string reason;

  explicit operator bool() const { return valid; }
};

Verdict VerifyCfcn(const Graph& g, const Coloring& c);
Verdict VerifyCfon(const Graph& g, const Coloring& c);
Verdict Verify(const Graph& g, const Coloring& c, Variant variant);

// Coloring file: one "v <vertex> <color>" line per vertex, "c" comments.
// Throws ParseError for out-of-range, missing, or duplicated vertices.
Coloring ParseColoring(std::string_view text, int num_vertices);
std::string WriteColoring(const Coloring& c);

// True iff no edge is monochromatic (ordinary proper coloring).
bool IsProperColoring(const Graph& g, const Coloring& c);

}  // namespace cfc

#endif  // CFC_COLORING_H_
