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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;

namespace cfc {
namespace {

Variant ToVariant(const std::string& name) {
  if (name == "cn") return Variant::kClosed;
  if (name == "on") return Variant::kOpen;
  throw InvalidArgument("variant must be 'cn' or 'on'");
}

Graph MakeGraph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  for (const auto& [u, v] : edges) es.push_back({std::min(u, v), std::max(u, v)});
  return Graph(n, es);
}

std::vector<std::pair<int, int>> EdgeList(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.Edges()) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<int> Colors(const Coloring& c) { return {c.colors().begin(), c.colors().end()}; }

py::dict OutcomeDict(const SolveOutcome& o) {
  py::dict d;
  d["coloring"] = Colors(o.coloring);
  d["colors_used"] = o.colors_used;
  d["optimality"] = std::string(OptimalityName(o.optimality));
  d["note"] = o.note;
  return d;
}

Modulator ToModulator(const Graph& g, std::vector<int> x, ResidualClass cls) {
  std::sort(x.begin(), x.end());
  Modulator m{x, cls};
  if (!IsValidModulator(g, m)) throw InvalidArgument("not a modulator of this graph");
  return m;
}

IntervalRepresentation ToIntervals(const std::vector<std::pair<py::object, py::object>>& raw) {
  IntervalRepresentation rep;
  for (const auto& [l, r] : raw) {
    rep.push_back({Rational::Parse(std::string(py::str(l))), Rational::Parse(std::string(py::str(r)))});
  }
  return rep;
}

}  // namespace
}  // namespace cfc

PYBIND11_MODULE(_cfc, m) {
  using namespace cfc;
  m.doc() = "Conflict-free graph coloring";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<SizeGuardError>(m, "SizeGuardError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&MakeGraph), py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_static("parse", [](const std::string& text) { return ParseGraph(text); })
      .def("write", [](const Graph& g) { return WriteGraph(g); })
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("edges", &EdgeList)
      .def("has_edge", &Graph::HasEdge)
      .def("neighbors", [](const Graph& g, int v) { return OpenNeighborhood(g, v); })
      .def("closed_neighborhood", [](const Graph& g, int v) { return ClosedNeighborhood(g, v); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.num_vertices()) +
               " m=" + std::to_string(g.num_edges()) + ">";
      });

  m.def("complete_graph", &CompleteGraph);
  m.def("path_graph", &PathGraph);
  m.def("cycle_graph", &CycleGraph);
  m.def("connected_components", &ConnectedComponents);

  m.def(
      "verify",
      [](const Graph& g, const std::vector<int>& colors, const std::string& variant) {
        const Verdict v = Verify(g, Coloring(colors), ToVariant(variant));
        py::dict d;
        d["valid"] = v.valid;
        d["failing_vertex"] = v.failing_vertex ? py::object(py::int_(*v.failing_vertex)) : py::none();
        d["reason"] = v.reason;
        return d;
      },
      py::arg("graph"), py::arg("coloring"), py::arg("variant") = "cn");

  m.def(
      "exact_cf",
      [](const Graph& g, const std::string& variant, int limit) -> py::object {
        OracleOptions options;
        options.vertex_limit = limit;
        const OracleResult r = ExactCf(g, ToVariant(variant), options);
        if (r.infeasible) return py::none();
        return py::make_tuple(*r.chromatic, Colors(*r.witness));
      },
      py::arg("graph"), py::arg("variant") = "cn", py::arg("limit") = 16,
      "(chromatic number, witness) or None when infeasible");

  m.def(
      "decide_cf",
      [](const Graph& g, const std::string& variant, int k, int limit) -> py::object {
        OracleOptions options;
        options.vertex_limit = limit;
        const auto c = DecideCf(g, ToVariant(variant), k, options);
        if (!c) return py::none();
        return py::cast(Colors(*c));
      },
      py::arg("graph"), py::arg("variant"), py::arg("k"), py::arg("limit") = 16);

  m.def("recognize", [](const Graph& g) {
    std::vector<std::string> names;
    for (GraphClass c : Recognize(g).labels) names.emplace_back(GraphClassName(c));
    return names;
  });

  m.def(
      "cluster_modulator",
      [](const Graph& g, int budget) -> py::object {
        auto mod = ClusterModulator(g, budget);
        return mod ? py::cast(mod->deleted) : py::none();
      },
      py::arg("graph"), py::arg("budget"));
  m.def(
      "threshold_modulator",
      [](const Graph& g, int budget) -> py::object {
        auto mod = ThresholdModulator(g, budget);
        return mod ? py::cast(mod->deleted) : py::none();
      },
      py::arg("graph"), py::arg("budget"));

  m.def("solve_bipartite_cfcn", [](const Graph& g) {
    auto bp = RecognizeBipartite(g);
    if (!bp) throw InvalidArgument("graph is not bipartite");
    return OutcomeDict(SolveBipartiteCfcn(g, *bp));
  });
  m.def("solve_split_cfcn", [](const Graph& g) {
    auto sp = RecognizeSplit(g);
    if (!sp) throw InvalidArgument("graph is not split");
    return OutcomeDict(SolveSplitCfcn(g, *sp));
  });
  m.def(
      "solve_cograph",
      [](const Graph& g, const std::string& variant) {
        return OutcomeDict(SolveCograph(g, ModularDecomposition(g), ToVariant(variant)));
      },
      py::arg("graph"), py::arg("variant") = "cn");
  m.def(
      "lemma1",
      [](const Graph& g, const std::vector<int>& x, const std::string& variant) {
        const Modulator mod = ToModulator(g, x, ResidualClass::kCluster);
        return OutcomeDict(ToVariant(variant) == Variant::kClosed ? Lemma1Cfcn(g, mod)
                                                                  : Lemma1Cfon(g, mod));
      },
      py::arg("graph"), py::arg("modulator"), py::arg("variant") = "cn");
  m.def(
      "solve_interval",
      [](const Graph& g, const std::vector<std::pair<py::object, py::object>>& intervals,
         const std::string& variant) {
        const IntervalRepresentation rep = ToIntervals(intervals);
        return OutcomeDict(ToVariant(variant) == Variant::kClosed ? CfcnInterval(g, rep)
                                                                  : CfonInterval(g, rep));
      },
      py::arg("graph"), py::arg("intervals"), py::arg("variant") = "cn",
      "intervals: (left, right) pairs of ints or rational strings such as '7/2'");

  m.def(
      "kernelize",
      [](const Graph& g, const std::vector<int>& x, const std::string& variant, int k) {
        const KernelInstance inst = Reduce(g, ToModulator(g, x, ResidualClass::kCluster),
                                           ToVariant(variant), k);
        py::dict d;
        d["kernel"] = inst.kernel;
        d["kernel_to_original"] = inst.kernel_to_original;
        d["short_circuit"] = inst.short_circuit;
        d["size_bound"] = inst.size_bound;
        d["provenance"] = inst.WriteProvenance();
        return d;
      },
      py::arg("graph"), py::arg("modulator"), py::arg("variant"), py::arg("k"));
  m.def(
      "solve_via_kernel",
      [](const Graph& g, const std::vector<int>& x, const std::string& variant,
         int k) -> py::object {
        const KernelDecision dec = SolveViaKernel(
            g, ToModulator(g, x, ResidualClass::kCluster), ToVariant(variant), k);
        if (!dec.yes) return py::none();
        return py::cast(Colors(*dec.coloring));
      },
      py::arg("graph"), py::arg("modulator"), py::arg("variant"), py::arg("k"),
      "lifted coloring with at most k colors, or None");
  m.def(
      "approx_threshold",
      [](const Graph& g, const std::vector<int>& x, const std::string& variant) {
        const Modulator mod = ToModulator(g, x, ResidualClass::kThreshold);
        const ApproxOutcome a = ToVariant(variant) == Variant::kClosed
                                    ? ApproxCfcnThreshold(g, mod)
                                    : ApproxCfonThreshold(g, mod);
        py::dict d = OutcomeDict(a.outcome);
        d["lower_bound"] = a.lower_bound;
        return d;
      },
      py::arg("graph"), py::arg("modulator"), py::arg("variant") = "cn");

  m.def(
      "gadget_encode",
      [](const Graph& g, int k) {
        const GadgetInstance inst = EncodeGadget(g, k);
        return py::make_tuple(inst.split, inst.x, inst.y);
      },
      py::arg("graph"), py::arg("k"), "(H, x, y)");
  m.def(
      "gadget_cross_validate",
      [](const Graph& g, int k, int limit) {
        CrossValidateOptions options;
        options.gadget_vertex_limit = limit;
        const CrossValidation r = CrossValidate(g, k, options);
        py::dict d;
        d["source_colorable"] = r.source_colorable;
        d["gadget_colorable"] = r.gadget_colorable;
        d["agrees"] = r.agrees();
        d["defect"] = r.defect;
        return d;
      },
      py::arg("graph"), py::arg("k"), py::arg("limit") = 16);

  m.def(
      "generate",
      [](const std::string& cls, int n, uint64_t seed, int d, double p, bool connected,
         const std::vector<int>& cliques) {
        GenSpec spec;
        auto parsed = ParseGenClass(cls);
        if (!parsed) throw InvalidArgument("unknown class " + cls);
        spec.cls = *parsed;
        spec.n = n;
        spec.seed = seed;
        spec.d = d;
        spec.edge_probability = p;
        spec.connected = connected;
        spec.clique_sizes = cliques;
        const Generated gen = Generate(spec);
        py::dict out;
        out["graph"] = gen.graph;
        out["modulator"] = gen.modulator ? py::cast(gen.modulator->deleted) : py::none();
        if (gen.intervals) {
          py::list ivs;
          for (const Interval& iv : *gen.intervals) {
            ivs.append(py::make_tuple(iv.left.ToString(), iv.right.ToString()));
          }
          out["intervals"] = ivs;
        } else {
          out["intervals"] = py::none();
        }
        return out;
      },
      py::arg("cls"), py::arg("n") = 0, py::arg("seed") = 0, py::arg("d") = 0,
      py::arg("p") = 0.5, py::arg("connected") = false,
      py::arg("cliques") = std::vector<int>{});
}
