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

#ifndef CFC_GENERATORS_H_
#define CFC_GENERATORS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cfc/classes.h"
#include "cfc/graph.h"
#include "cfc/interval.h"

namespace cfc {

// Portable 64-bit generator (splitmix64). Standard-library distributions are
// implementation-defined, so all sampling goes through this class to keep
// outputs identical across platforms for a given seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t Next();
  // Uniform in [0, bound). bound > 0.
  uint64_t Below(uint64_t bound);
  int Between(int lo, int hi);  // inclusive
  bool Chance(double p);

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[Below(i)]);
  }

 private:
  uint64_t state_;
};

enum class GenClass {
  kRandom,              // G(n, p)
  kCluster,             // disjoint cliques
  kClusterModulator,    // cluster graph + d modulator vertices
  kSplit,
  kThreshold,
  kThresholdModulator,  // threshold graph + d modulator vertices
  kCograph,
  kBipartite,
  kInterval,
};

std::string_view GenClassName(GenClass c);
std::optional<GenClass> ParseGenClass(std::string_view name);

struct GenSpec {
  GenClass cls = GenClass::kRandom;
  int n = 0;  // total vertex count (ignored when clique_sizes is set)
  uint64_t seed = 0;
  int d = 0;                      // modulator size for *-modulator classes
  std::vector<int> clique_sizes;  // explicit cliques for cluster classes
  double edge_probability = 0.5;
  bool connected = false;         // resample until connected
};

struct Generated {
  Graph graph;
  std::optional<SplitPartition> split;
  std::optional<IntervalRepresentation> intervals;
  std::optional<Modulator> modulator;
  std::optional<ThresholdOrder> threshold;
  std::optional<Bipartition> bipartition;
};

// Deterministic in the full spec (seed included). Throws InvalidArgument on
// contradictory knobs.
Generated Generate(const GenSpec& spec);

// Certificate-preserving canonical labeling: the lexicographically largest
// upper-triangle adjacency string over all vertex orders compatible with an
// iterated degree refinement. Equal for isomorphic graphs only.
std::vector<bool> CanonicalForm(const Graph& g);

// All connected graphs on 2..max_n vertices up to isomorphism that pass
// `filter`, smallest order first. max_n <= 7.
std::vector<Graph> EnumerateSmall(int max_n,
                                  const std::function<bool(const Graph&)>& filter = {});

// Same without the size cap; used by exhaustive tests that go one size
// further for a particular class.
std::vector<Graph> EnumerateConnected(int max_n,
                                      const std::function<bool(const Graph&)>& filter = {});

// All connected split graphs on exactly n vertices up to isomorphism, built
// directly from (clique size, independent-side neighborhoods).
std::vector<Graph> EnumerateSplit(int n);

}  // namespace cfc

#endif  // CFC_GENERATORS_H_
