#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "precolor/colorgraph.hpp"
#include "precolor/errors.hpp"
#include "precolor/extend2.hpp"
#include "precolor/extend3.hpp"
#include "precolor/graph.hpp"
#include "precolor/instances.hpp"
#include "precolor/io.hpp"
#include "precolor/oracle.hpp"

namespace py = pybind11;
using namespace precolor;

namespace {

py::dict report_to_dict(const Extend2Report& report) {
  py::dict out;
  out["r"] = report.r;
  out["k"] = report.k;
  out["theorem"] = report.theorem;
  out["d2_pairs"] = report.d2_pairs;
  out["weight"] = report.weight;
  out["bound"] = report.bound;
  out["hypothesis_satisfied"] = report.hypothesis_satisfied;
  out["target"] = report.target;
  out["success"] = report.success;
  out["matching"] = report.matching;
  out["budget"] = report.budget;
  out["colors_used"] = report.colors_used;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Precoloring extension under distance constraints";

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<guarantee_error>(m, "GuaranteeError", PyExc_RuntimeError);
  py::register_exception<retry_error>(m, "RetryError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("degree", &Graph::degree, py::arg("v"))
      .def("neighbors", &Graph::neighbors, py::arg("v"))
      .def("edges", &Graph::edges)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("bfs_distances", &bfs_distances, py::arg("graph"), py::arg("source"),
        "Shortest-path distances; -1 marks unreachable vertices.");
  m.def("pairs_within", &pairs_within, py::arg("graph"), py::arg("p"), py::arg("k"),
        "Unordered pairs of p at graph distance <= k.");
  m.def("coloring_conflict", &coloring_conflict, py::arg("graph"), py::arg("coloring"),
        "First monochromatic edge, or None when the coloring is proper.");
  m.def("is_proper", &is_proper, py::arg("graph"), py::arg("coloring"));
  m.def("precoloring_conflict", &precoloring_conflict, py::arg("graph"), py::arg("precoloring"));
  m.def("extends", &extends, py::arg("coloring"), py::arg("precoloring"));
  m.def("distinct_colors", &distinct_colors, py::arg("coloring"));

  m.def("load_dimacs", &load_dimacs, py::arg("text"));
  m.def("save_dimacs", &save_dimacs, py::arg("graph"));
  m.def("load_precoloring", &load_precoloring, py::arg("text"), py::arg("n"));
  m.def("save_precoloring", &save_precoloring, py::arg("precoloring"));
  m.def("load_coloring", &load_coloring, py::arg("text"), py::arg("n"));
  m.def("save_coloring", &save_coloring, py::arg("coloring"));

  m.def(
      "exact_k_colorable",
      [](const Graph& g, int k, const std::optional<Precoloring>& d) {
        return exact_k_colorable(g, k, d ? &*d : nullptr);
      },
      py::arg("graph"), py::arg("k"), py::arg("precoloring") = std::nullopt,
      "Proper k-coloring extending the precoloring, or None.");
  m.def(
      "min_extension_colors",
      [](const Graph& g, const Precoloring& d, int cap) -> std::optional<std::pair<int, Coloring>> {
        auto result = min_extension_colors(g, d, cap);
        if (!result) return std::nullopt;
        return std::pair{result->colors, result->witness};
      },
      py::arg("graph"), py::arg("precoloring"), py::arg("cap"),
      "Smallest color count <= cap admitting an extension, with a witness.");
  m.def("max_matching_exact", &max_matching_exact, py::arg("n"), py::arg("edges"));
  m.def(
      "berge_deficiency",
      [](int n, const std::vector<VertexPair>& edges) {
        BergeResult result = berge_deficiency(n, edges);
        return std::pair{result.deficiency, result.witness};
      },
      py::arg("n"), py::arg("edges"),
      "Deficiency and a witness set maximizing odd components minus |S|.");

  py::class_<OrderedPartition>(m, "OrderedPartition")
      .def_readonly("num_colors", &OrderedPartition::num_colors)
      .def_readonly("phi", &OrderedPartition::phi)
      .def("phi_of", &OrderedPartition::phi_of, py::arg("i"), py::arg("j"))
      .def("edge_class", &OrderedPartition::edge_class, py::arg("i"), py::arg("j"))
      .def("class_edges", &OrderedPartition::class_edges, py::arg("cls"))
      .def("__repr__", [](const OrderedPartition& e) {
        return "OrderedPartition(num_colors=" + std::to_string(e.num_colors) + ", weight=" +
               std::to_string(partition_weight(e)) + ")";
      });

  m.def("build_partition", &build_partition, py::arg("graph"), py::arg("precoloring"),
        py::arg("num_colors"));
  m.def("partition_weight", &partition_weight, py::arg("partition"));
  m.def("is_good", &is_good, py::arg("matching"), py::arg("partition"));
  m.def("one_factorization", &one_factorization, py::arg("n"));
  m.def("find_good_matching", &find_good_matching, py::arg("partition"), py::arg("target"));
  m.def("scan_factors_for_good", &scan_factors_for_good, py::arg("partition"));
  m.def("augment_good_matching", &augment_good_matching, py::arg("matching"), py::arg("partition"));
  m.def("max_edges_without_matching", &max_edges_without_matching, py::arg("n"), py::arg("t"));
  m.def("matching_extremal_graphs", &matching_extremal_graphs, py::arg("n"), py::arg("t"));

  m.def("least_k_for_pair_count", &least_k_for_pair_count, py::arg("pair_count"));
  m.def("extend_distance3", &extend_distance3, py::arg("graph"), py::arg("precoloring"),
        py::arg("base"), py::arg("r"), py::arg("k"),
        "Extension with at most r+k colors given at most k(k+1)/2 close pairs.");
  m.def(
      "extend_distance2",
      [](const Graph& g, const Precoloring& d, const Coloring& base, int r, int k) {
        Extend2Result result = extend_distance2(g, d, base, r, k);
        return std::pair{result.coloring, report_to_dict(result.report)};
      },
      py::arg("graph"), py::arg("precoloring"), py::arg("base"), py::arg("r"), py::arg("k"),
      "Matching-based extension; returns (coloring or None, report dict).");
  m.def("greedy_extension", &greedy_extension, py::arg("graph"), py::arg("precoloring"));

  py::class_<Instance>(m, "Instance")
      .def_readonly("graph", &Instance::graph)
      .def_readonly("p", &Instance::p)
      .def_readonly("d", &Instance::d)
      .def_readonly("r", &Instance::r)
      .def_readonly("k", &Instance::k)
      .def_readonly("q", &Instance::q)
      .def_readonly("base", &Instance::base)
      .def_readonly("d2_pairs", &Instance::d2_pairs)
      .def_readonly("d3_pairs", &Instance::d3_pairs)
      .def_readonly("budget", &Instance::budget)
      .def("__repr__", [](const Instance& inst) {
        return "Instance(n=" + std::to_string(inst.graph.n()) + ", r=" + std::to_string(inst.r) +
               ", k=" + std::to_string(inst.k) + ")";
      });

  m.def("gen_sharpness_even", &gen_sharpness_even, py::arg("r"), py::arg("k"), py::arg("q"));
  m.def("gen_sharpness_odd", &gen_sharpness_odd, py::arg("r"), py::arg("k"), py::arg("q"));
  m.def(
      "gen_random",
      [](int r, int k, int n, double edge_prob, int p_size, long long max_d2, long long max_d3,
         std::uint64_t seed, int max_retries) {
        RandomInstanceParams params;
        params.r = r;
        params.k = k;
        params.n = n;
        params.edge_prob = edge_prob;
        params.p_size = p_size;
        params.max_d2 = max_d2;
        params.max_d3 = max_d3;
        params.seed = seed;
        params.max_retries = max_retries;
        return gen_random(params);
      },
      py::arg("r"), py::arg("k"), py::arg("n"), py::arg("edge_prob"), py::arg("p_size"),
      py::arg("max_d2") = -1, py::arg("max_d3") = -1, py::arg("seed") = 0,
      py::arg("max_retries") = 500);
}
