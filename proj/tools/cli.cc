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

#include "cli.h"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "cfc/classes.h"
#include "cfc/coloring.h"
#include "cfc/error.h"
#include "cfc/fpt.h"
#include "cfc/generators.h"
#include "cfc/graph.h"
#include "cfc/hardness.h"
#include "cfc/interval.h"
#include "cfc/oracle.h"
#include "cfc/polysolve.h"

namespace cfc::cli {
namespace {

constexpr const char* kVersion = "cfc 0.1.0";

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by handlers that have already reported; carries the exit code.
struct Exit {
  int code;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) throw IoError("cannot write " + path);
}

std::string Digest(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string JoinIds(std::span<const int> ids) {
  std::string s;
  for (int v : ids) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

// One `key: value` per line, written as results become known.
class Report {
 public:
  explicit Report(std::ostream& out) : out_(out), start_(std::chrono::steady_clock::now()) {}

  template <typename T>
  void operator()(const std::string& key, const T& value) {
    out_ << key << ": " << value << '\n';
  }

  void Elapsed() {
    const auto ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    std::ostringstream v;
    v << std::fixed << std::setprecision(3) << ms;
    (*this)("time_ms", v.str());
  }

 private:
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_;
};

struct LoadedGraph {
  Graph graph;
  std::string digest;
};

LoadedGraph LoadGraph(const std::string& path) {
  const std::string text = ReadFile(path);
  return {ParseGraph(text), Digest(text)};
}

Variant ToVariant(const std::string& name) {
  return name == "cn" ? Variant::kClosed : Variant::kOpen;
}

bool HasIsolated(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.Degree(v) == 0) return true;
  }
  return false;
}

VertexSet ParseVertexList(const std::string& text, int n) {
  VertexSet out;
  if (text == "none") return out;
  std::string spaced = text;
  for (char& c : spaced) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(spaced);
  long long v;
  while (in >> v) {
    if (v < 0 || v >= n) throw InvalidArgument("modulator vertex " + std::to_string(v) + " out of range");
    out.push_back(static_cast<Vertex>(v));
  }
  if (!in.eof()) throw InvalidArgument("bad vertex list '" + text + "'");
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw InvalidArgument("duplicate vertex in modulator");
  }
  return out;
}

Modulator ResolveModulator(const Graph& g, const std::string& spec, ResidualClass cls, int budget) {
  if (spec == "auto") {
    auto m = cls == ResidualClass::kCluster ? ClusterModulator(g, budget)
                                            : ThresholdModulator(g, budget);
    if (!m) {
      throw InvalidArgument(std::string("no ") +
                            (cls == ResidualClass::kCluster ? "cluster" : "threshold") +
                            " modulator within budget " + std::to_string(budget));
    }
    return *m;
  }
  Modulator m{ParseVertexList(spec, g.num_vertices()), cls};
  if (!IsValidModulator(g, m)) throw InvalidArgument("given vertex set is not a modulator");
  return m;
}

std::string ColorList(const Coloring& c) { return JoinIds(c.colors()); }

// Re-verifies solver output; a failure is an internal defect.
void SelfCheck(const Graph& g, const Coloring& c, Variant variant, Report& report) {
  const Verdict verdict = Verify(g, c, variant);
  report("verified", verdict.valid ? "yes" : "no");
  if (!verdict.valid) {
    report("defect", verdict.reason);
    throw Exit{kSelfCheck};
  }
}

void EmitColoring(const Coloring& c, const std::string& output, Report& report) {
  report("colors_used", c.NumColors());
  report("coloring", ColorList(c));
  if (!output.empty()) {
    WriteFile(output, WriteColoring(c));
    report("output", output);
  }
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string variant = "cn";
  std::string graph;
  std::string coloring;
};

int RunVerify(const VerifyArgs& a, Report& report) {
  const LoadedGraph lg = LoadGraph(a.graph);
  const std::string ctext = ReadFile(a.coloring);
  const Coloring c = ParseColoring(ctext, lg.graph.num_vertices());
  report("graph_digest", lg.digest);
  report("coloring_digest", Digest(ctext));
  report("variant", a.variant);
  const Verdict verdict = Verify(lg.graph, c, ToVariant(a.variant));
  report("valid", verdict.valid ? "yes" : "no");
  report("colors_used", c.NumColors());
  if (verdict.failing_vertex) report("failing_vertex", *verdict.failing_vertex);
  if (!verdict.valid) report("reason", verdict.reason);
  return verdict.valid ? kOk : kNo;
}

struct OracleArgs {
  std::string variant = "cn";
  std::optional<int> k;
  int limit = 16;
  std::string output;
  std::string graph;
};

int RunOracle(const OracleArgs& a, Report& report) {
  const LoadedGraph lg = LoadGraph(a.graph);
  const Variant variant = ToVariant(a.variant);
  report("graph_digest", lg.digest);
  report("variant", a.variant);
  OracleOptions options;
  options.vertex_limit = a.limit;
  if (a.k) {
    report("k", *a.k);
    const std::optional<Coloring> witness = DecideCf(lg.graph, variant, *a.k, options);
    report("decision", witness ? "YES" : "NO");
    if (!witness) return kNo;
    SelfCheck(lg.graph, *witness, variant, report);
    EmitColoring(*witness, a.output, report);
    return kOk;
  }
  const OracleResult result = ExactCf(lg.graph, variant, options);
  if (result.infeasible) {
    report("chromatic", "infeasible");
    return kNo;
  }
  report("chromatic", *result.chromatic);
  SelfCheck(lg.graph, *result.witness, variant, report);
  EmitColoring(*result.witness, a.output, report);
  return kOk;
}

struct SolveArgs {
  std::string variant = "cn";
  std::string strategy = "auto";
  std::string intervals;
  std::string modulator = "auto";
  int budget = 6;
  int limit = 16;
  std::string output;
  std::string graph;
};

struct Solved {
  std::string strategy;
  SolveOutcome outcome;
  std::optional<Modulator> modulator;
  std::optional<int> lower_bound;
};

Solved SolveWith(const std::string& strategy, const Graph& g, Variant variant,
                 const SolveArgs& a) {
  const bool closed = variant == Variant::kClosed;
  auto cn_only = [&] {
    if (!closed) throw InvalidArgument("strategy " + strategy + " supports only --variant cn");
  };
  Solved s;
  s.strategy = strategy;
  if (strategy == "bipartite") {
    cn_only();
    auto bp = RecognizeBipartite(g);
    if (!bp) throw InvalidArgument("graph is not bipartite");
    s.outcome = SolveBipartiteCfcn(g, *bp);
  } else if (strategy == "split") {
    cn_only();
    auto sp = RecognizeSplit(g);
    if (!sp) throw InvalidArgument("graph is not split");
    s.outcome = SolveSplitCfcn(g, *sp);
  } else if (strategy == "cograph") {
    const ModularDecompositionTree tree = ModularDecomposition(g);
    if (tree.HasPrimeNode()) throw InvalidArgument("graph is not a cograph");
    s.outcome = SolveCograph(g, tree, variant);
  } else if (strategy == "interval") {
    if (a.intervals.empty()) throw InvalidArgument("strategy interval needs --intervals");
    const IntervalRepresentation rep = ParseIntervals(ReadFile(a.intervals), g.num_vertices());
    s.outcome = closed ? CfcnInterval(g, rep) : CfonInterval(g, rep);
  } else if (strategy == "lemma1" || strategy == "fpt") {
    s.modulator = ResolveModulator(g, a.modulator, ResidualClass::kCluster, a.budget);
    if (strategy == "lemma1") {
      s.outcome = closed ? Lemma1Cfcn(g, *s.modulator) : Lemma1Cfon(g, *s.modulator);
    } else {
      KernelSolveOptions options;
      options.kernel_vertex_limit = std::max(a.limit, 24);
      s.outcome = SolveFpt(g, *s.modulator, variant, options);
    }
  } else if (strategy == "threshold") {
    s.modulator = ResolveModulator(g, a.modulator, ResidualClass::kThreshold, a.budget);
    ApproxOutcome approx = closed ? ApproxCfcnThreshold(g, *s.modulator)
                                  : ApproxCfonThreshold(g, *s.modulator);
    s.outcome = std::move(approx.outcome);
    s.lower_bound = approx.lower_bound;
  } else if (strategy == "oracle") {
    OracleOptions options;
    options.vertex_limit = a.limit;
    OracleResult r = ExactCf(g, variant, options);
    s.outcome = MakeOutcome(std::move(*r.witness), Optimality::kExact);
  } else {
    throw InvalidArgument("unknown strategy " + strategy);
  }
  return s;
}

// Exact class solvers first, then parameterized ones with a computed
// modulator, then the oracle, then the cograph upper bound.
Solved SolveAuto(const Graph& g, Variant variant, const SolveArgs& a) {
  const bool closed = variant == Variant::kClosed;
  if (closed && g.num_edges() > 0) {
    if (RecognizeSplit(g)) return SolveWith("split", g, variant, a);
    if (RecognizeBipartite(g)) return SolveWith("bipartite", g, variant, a);
  }
  const bool cograph = g.num_vertices() >= 2 && IsConnected(g) &&
                       !ModularDecomposition(g).HasPrimeNode();
  // The cograph construction is exact only for CF-CN with a universal vertex.
  if (cograph && closed && !UniversalVertices(g).empty()) {
    return SolveWith("cograph", g, variant, a);
  }
  const std::optional<Modulator> cluster = ClusterModulator(g, a.budget);
  const std::optional<Modulator> threshold = ThresholdModulator(g, a.budget);
  SolveArgs with = a;
  if (cluster && (!threshold || cluster->size() <= threshold->size())) {
    with.modulator = JoinIds(cluster->deleted);
    if (with.modulator.empty()) with.modulator = "none";
    try {
      return SolveWith("fpt", g, variant, with);
    } catch (const SizeGuardError&) {
      return SolveWith("lemma1", g, variant, with);
    }
  }
  if (threshold) {
    with.modulator = JoinIds(threshold->deleted);
    if (with.modulator.empty()) with.modulator = "none";
    return SolveWith("threshold", g, variant, with);
  }
  if (g.num_vertices() <= a.limit) return SolveWith("oracle", g, variant, a);
  if (cograph) return SolveWith("cograph", g, variant, a);
  throw SizeGuardError("no strategy applies: no class solver, no modulator within budget " +
                       std::to_string(a.budget) + ", and n exceeds the oracle limit " +
                       std::to_string(a.limit));
}

int RunSolve(const SolveArgs& a, Report& report) {
  const LoadedGraph lg = LoadGraph(a.graph);
  const Variant variant = ToVariant(a.variant);
  report("graph_digest", lg.digest);
  report("variant", a.variant);
  if (variant == Variant::kOpen && HasIsolated(lg.graph)) {
    report("result", "infeasible (isolated vertex)");
    return kNo;
  }
  const Solved s = a.strategy == "auto" ? SolveAuto(lg.graph, variant, a)
                                        : SolveWith(a.strategy, lg.graph, variant, a);
  report("strategy", s.strategy);
  if (s.modulator) report("modulator", s.modulator->deleted.empty() ? "none" : JoinIds(s.modulator->deleted));
  report("optimality", OptimalityName(s.outcome.optimality));
  if (s.lower_bound) report("lower_bound", *s.lower_bound);
  if (!s.outcome.note.empty()) report("note", s.outcome.note);
  SelfCheck(lg.graph, s.outcome.coloring, variant, report);
  EmitColoring(s.outcome.coloring, a.output, report);
  return kOk;
}

std::string CotreeString(const ModularDecompositionTree& tree, int node) {
  const ModuleNode& h = tree.node(node);
  if (h.kind == ModuleKind::kLeaf) return std::to_string(h.module.front());
  std::string s(ModuleKindName(h.kind));
  s += '(';
  for (size_t i = 0; i < h.children.size(); ++i) {
    if (i > 0) s += ' ';
    s += CotreeString(tree, h.children[i]);
  }
  return s + ')';
}

int RunRecognize(const std::string& path, Report& report) {
  const LoadedGraph lg = LoadGraph(path);
  report("graph_digest", lg.digest);
  const Recognition r = Recognize(lg.graph);
  std::string labels;
  for (GraphClass c : r.labels) {
    if (!labels.empty()) labels += ' ';
    labels += GraphClassName(c);
  }
  report("classes", labels);
  if (r.bipartition) {
    report("bipartition_a", JoinIds(r.bipartition->a));
    report("bipartition_b", JoinIds(r.bipartition->b));
  }
  if (r.cluster_cliques) {
    std::string s;
    for (const VertexSet& c : *r.cluster_cliques) s += (s.empty() ? "" : " | ") + JoinIds(c);
    report("cluster_cliques", s);
  }
  if (r.split) {
    report("split_clique", JoinIds(r.split->clique));
    report("split_independent", JoinIds(r.split->independent));
  }
  if (r.threshold) {
    std::string s;
    for (const ThresholdStep& step : *r.threshold) {
      s += (s.empty() ? "" : " ") + std::to_string(step.vertex) + (step.universal ? "u" : "i");
    }
    report("threshold_elimination", s);
  }
  if (r.cotree && r.cotree->root >= 0) report("cotree", CotreeString(*r.cotree, r.cotree->root));
  return kOk;
}

struct ModulatorArgs {
  std::string cls = "cluster";
  int budget = 0;
  std::string graph;
};

int RunModulator(const ModulatorArgs& a, Report& report) {
  const LoadedGraph lg = LoadGraph(a.graph);
  report("graph_digest", lg.digest);
  report("class", a.cls);
  report("budget", a.budget);
  const auto m = a.cls == "cluster" ? ClusterModulator(lg.graph, a.budget)
                                    : ThresholdModulator(lg.graph, a.budget);
  if (!m) {
    report("modulator", "none");
    return kNo;
  }
  report("size", m->size());
  report("modulator", JoinIds(m->deleted));
  return kOk;
}

struct KernelizeArgs {
  std::string variant = "cn";
  int k = 1;
  std::string modulator = "auto";
  int budget = 6;
  std::string output;
  std::string provenance;
  std::string graph;
};

int RunKernelize(const KernelizeArgs& a, Report& report) {
  const LoadedGraph lg = LoadGraph(a.graph);
  const Variant variant = ToVariant(a.variant);
  report("graph_digest", lg.digest);
  report("variant", a.variant);
  report("k", a.k);
  if (variant == Variant::kOpen && HasIsolated(lg.graph)) {
    report("result", "infeasible (isolated vertex)");
    return kNo;
  }
  const Modulator m = ResolveModulator(lg.graph, a.modulator, ResidualClass::kCluster, a.budget);
  const KernelInstance inst = Reduce(lg.graph, m, variant, a.k);
  report("modulator", m.deleted.empty() ? "none" : JoinIds(m.deleted));
  report("d", m.size());
  report("cap", inst.cap);
  report("short_circuit", inst.short_circuit ? "yes" : "no");
  report("kernel_vertices", inst.kernel.num_vertices());
  report("kernel_edges", inst.kernel.num_edges());
  report("size_bound", inst.size_bound);
  report("deleted_vertices", inst.deleted_vertices.size());
  report("deleted_cliques", inst.deleted_cliques.size());
  report("kernel_to_original", JoinIds(inst.kernel_to_original));
  const std::string prov = a.provenance.empty() ? a.output + ".prov" : a.provenance;
  WriteFile(a.output, WriteGraph(inst.kernel));
  WriteFile(prov, inst.WriteProvenance());
  report("output", a.output);
  report("provenance", prov);
  return kOk;
}

struct GadgetArgs {
  int k = 3;
  int limit = 16;
  std::string output;
  std::string map;
  std::string graph;
};

int RunGadgetEncode(const GadgetArgs& a, Report& report) {
  const LoadedGraph lg = LoadGraph(a.graph);
  report("graph_digest", lg.digest);
  const GadgetInstance inst = EncodeGadget(lg.graph, a.k);
  report("k", a.k);
  report("gadget_vertices", inst.split.num_vertices());
  report("gadget_edges", inst.split.num_edges());
  report("clique_side", inst.partition.clique.size());
  report("independent_side", inst.partition.independent.size());
  const std::string map = a.map.empty() ? a.output + ".map" : a.map;
  WriteFile(a.output, WriteGraph(inst.split));
  WriteFile(map, inst.WriteMap());
  report("output", a.output);
  report("map", map);
  return kOk;
}

int RunGadgetValidate(const GadgetArgs& a, Report& report) {
  const LoadedGraph lg = LoadGraph(a.graph);
  report("graph_digest", lg.digest);
  report("k", a.k);
  CrossValidateOptions options;
  options.gadget_vertex_limit = a.limit;
  const CrossValidation r = CrossValidate(lg.graph, a.k, options);
  report("gadget_vertices", r.gadget_vertices);
  report("source_colorable", r.source_colorable ? "yes" : "no");
  report("gadget_colorable", r.gadget_colorable ? "yes" : "no");
  if (!r.defect.empty()) report("defect", r.defect);
  report("agrees", r.agrees() ? "yes" : "no");
  return r.agrees() ? kOk : kSelfCheck;
}

struct GenArgs {
  std::string cls = "random";
  int n = 0;
  uint64_t seed = 0;
  int d = 0;
  double p = 0.5;
  std::vector<int> cliques;
  bool connected = false;
  std::string output;
  std::string certificate;
};

std::string CertificateText(const Generated& gen) {
  if (gen.intervals) return WriteIntervals(*gen.intervals);
  std::ostringstream out;
  if (gen.modulator) {
    out << "modulator "
        << (gen.modulator->residual_class == ResidualClass::kCluster ? "cluster" : "threshold");
    for (Vertex v : gen.modulator->deleted) out << ' ' << v;
    out << '\n';
  }
  if (gen.split) {
    out << "split-clique " << JoinIds(gen.split->clique) << '\n';
    out << "split-independent " << JoinIds(gen.split->independent) << '\n';
  }
  if (gen.bipartition) {
    out << "bipartition-a " << JoinIds(gen.bipartition->a) << '\n';
    out << "bipartition-b " << JoinIds(gen.bipartition->b) << '\n';
  }
  if (gen.threshold) {
    out << "threshold-elimination";
    for (const ThresholdStep& step : *gen.threshold) {
      out << ' ' << step.vertex << (step.universal ? 'u' : 'i');
    }
    out << '\n';
  }
  return out.str();
}

int RunGen(const GenArgs& a, std::ostream& out, Report& report) {
  GenSpec spec;
  spec.cls = *ParseGenClass(a.cls);
  spec.n = a.n;
  spec.seed = a.seed;
  spec.d = a.d;
  spec.edge_probability = a.p;
  spec.clique_sizes = a.cliques;
  spec.connected = a.connected;
  const Generated gen = Generate(spec);
  const std::string text = WriteGraph(gen.graph);
  if (a.output.empty()) {
    out << text;
    return kOk;
  }
  WriteFile(a.output, text);
  report("class", a.cls);
  report("seed", a.seed);
  report("vertices", gen.graph.num_vertices());
  report("edges", gen.graph.num_edges());
  report("graph_digest", Digest(text));
  report("output", a.output);
  const std::string cert = CertificateText(gen);
  if (!a.certificate.empty() && !cert.empty()) {
    WriteFile(a.certificate, cert);
    report("certificate", a.certificate);
  }
  return kOk;
}

void AddVariant(CLI::App* app, std::string& target) {
  app->add_option("--variant", target, "cn (closed) or on (open neighborhoods)")
      ->check(CLI::IsMember({"cn", "on"}))
      ->required();
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conflict-free graph coloring toolkit", "cfc"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check a coloring against CF-CN or CF-ON");
  AddVariant(verify, verify_args.variant);
  verify->add_option("graph", verify_args.graph)->required();
  verify->add_option("coloring", verify_args.coloring)->required();

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Exact conflict-free chromatic number");
  AddVariant(oracle, oracle_args.variant);
  oracle->add_option("--k", oracle_args.k, "decide k-colorability instead")->check(CLI::PositiveNumber);
  oracle->add_option("--limit", oracle_args.limit, "vertex guard")->capture_default_str();
  oracle->add_option("-o,--output", oracle_args.output, "witness coloring file");
  oracle->add_option("graph", oracle_args.graph)->required();

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Color with a polynomial or parameterized solver");
  AddVariant(solve, solve_args.variant);
  solve->add_option("--strategy", solve_args.strategy)
      ->check(CLI::IsMember({"auto", "bipartite", "split", "cograph", "lemma1", "fpt",
                             "threshold", "interval", "oracle"}))
      ->capture_default_str();
  solve->add_option("--intervals", solve_args.intervals, "interval file (strategy interval)");
  solve->add_option("--modulator", solve_args.modulator, "vertex list, 'none' or 'auto'")
      ->capture_default_str();
  solve->add_option("--budget", solve_args.budget, "modulator search budget")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  solve->add_option("--limit", solve_args.limit, "oracle vertex guard")->capture_default_str();
  solve->add_option("-o,--output", solve_args.output, "coloring file");
  solve->add_option("graph", solve_args.graph)->required();

  std::string recognize_graph;
  auto* recognize = app.add_subcommand("recognize", "Report graph classes with certificates");
  recognize->add_option("graph", recognize_graph)->required();

  ModulatorArgs modulator_args;
  auto* modulator = app.add_subcommand("modulator", "Minimum modulator within a budget");
  modulator->add_option("--class", modulator_args.cls)
      ->check(CLI::IsMember({"cluster", "threshold"}))
      ->required();
  modulator->add_option("--budget", modulator_args.budget)->check(CLI::NonNegativeNumber)->required();
  modulator->add_option("graph", modulator_args.graph)->required();

  KernelizeArgs kernel_args;
  auto* kernelize = app.add_subcommand("kernelize", "Apply the cluster-modulator reduction rules");
  AddVariant(kernelize, kernel_args.variant);
  kernelize->add_option("--k", kernel_args.k)->check(CLI::PositiveNumber)->required();
  kernelize->add_option("--modulator", kernel_args.modulator, "vertex list, 'none' or 'auto'")
      ->capture_default_str();
  kernelize->add_option("--budget", kernel_args.budget)->capture_default_str();
  kernelize->add_option("-o,--output", kernel_args.output, "kernel graph file")->required();
  kernelize->add_option("--provenance", kernel_args.provenance, "default: <output>.prov");
  kernelize->add_option("graph", kernel_args.graph)->required();

  GadgetArgs gadget_args;
  auto* gadget = app.add_subcommand("gadget", "Split-graph CF-ON hardness gadget");
  gadget->require_subcommand(1);
  auto* encode = gadget->add_subcommand("encode", "Write the split graph H");
  encode->add_option("--k", gadget_args.k)->check(CLI::Range(3, 1 << 20))->required();
  encode->add_option("-o,--output", gadget_args.output)->required();
  encode->add_option("--map", gadget_args.map, "default: <output>.map");
  encode->add_option("graph", gadget_args.graph)->required();
  auto* validate = gadget->add_subcommand("validate", "Check k-colorable <=> H CF-ON (k+2)-colorable");
  validate->add_option("--k", gadget_args.k)->check(CLI::Range(3, 1 << 20))->required();
  validate->add_option("--limit", gadget_args.limit, "vertex guard on H")->capture_default_str();
  validate->add_option("graph", gadget_args.graph)->required();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  std::vector<std::string> class_names;
  for (GenClass c : {GenClass::kRandom, GenClass::kCluster, GenClass::kClusterModulator,
                     GenClass::kSplit, GenClass::kThreshold, GenClass::kThresholdModulator,
                     GenClass::kCograph, GenClass::kBipartite, GenClass::kInterval}) {
    class_names.emplace_back(GenClassName(c));
  }
  gen->add_option("--class", gen_args.cls)->check(CLI::IsMember(class_names))->required();
  gen->add_option("--n", gen_args.n)->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", gen_args.seed)->capture_default_str();
  gen->add_option("--d", gen_args.d, "modulator size")->check(CLI::NonNegativeNumber);
  gen->add_option("--p", gen_args.p, "edge probability")->capture_default_str();
  gen->add_option("--cliques", gen_args.cliques, "clique sizes, e.g. 3,2")->delimiter(',');
  gen->add_flag("--connected", gen_args.connected, "resample until connected");
  gen->add_option("-o,--output", gen_args.output, "graph file (default: stdout)");
  gen->add_option("--certificate", gen_args.certificate, "certificate file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  Report report(out);
  auto command = [&] {
    std::string s = "cfc";
    for (const std::string& a : args) s += ' ' + a;
    return s;
  };
  try {
    int code = kOk;
    const bool quiet = *gen && gen_args.output.empty();
    if (!quiet) report("command", command());
    if (*verify) code = RunVerify(verify_args, report);
    if (*oracle) code = RunOracle(oracle_args, report);
    if (*solve) code = RunSolve(solve_args, report);
    if (*recognize) code = RunRecognize(recognize_graph, report);
    if (*modulator) code = RunModulator(modulator_args, report);
    if (*kernelize) code = RunKernelize(kernel_args, report);
    if (*encode) code = RunGadgetEncode(gadget_args, report);
    if (*validate) code = RunGadgetValidate(gadget_args, report);
    if (*gen) code = RunGen(gen_args, out, report);
    if (!quiet) report("exit_code", code);
    if (!quiet) report.Elapsed();
    return code;
  } catch (const Exit& e) {
    report("exit_code", e.code);
    return e.code;
  } catch (const SizeGuardError& e) {
    err << "cfc: size guard: " << e.what() << '\n';
    report("exit_code", static_cast<int>(kSizeGuard));
    return kSizeGuard;
  } catch (const ParseError& e) {
    err << "cfc: parse error: " << e.what() << '\n';
  } catch (const IoError& e) {
    err << "cfc: " << e.what() << '\n';
  } catch (const InvalidArgument& e) {
    err << "cfc: " << e.what() << '\n';
  }
  report("exit_code", static_cast<int>(kUsage));
  return kUsage;
}

}  // namespace cfc::cli
