#include "kdelta/baselines.hpp"
#include "kdelta/enumerate.hpp"
#include "kdelta/graph.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace kdelta;

namespace {

std::vector<std::vector<VertexId>> run_collect(const Graph &g, int k,
                                               bool use_simple) {
    std::vector<std::vector<VertexId>> out;
    SolutionSink sink = [&](std::span<const VertexId> sol, std::uint64_t) {
        std::vector<VertexId> s(sol.begin(), sol.end());
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
        return true;
    };
    if (use_simple)
        simple_enumerate(g, k, sink);
    else
        enumerate_k_subgraphs(g, k, sink);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bounded-delay enumeration of connected induced subgraphs of "
              "size k";

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors",
             [](const Graph &g, VertexId v) {
                 auto nb = g.neighbors(v);
                 return std::vector<VertexId>(nb.begin(), nb.end());
             },
             py::arg("v"))
        .def("label", &Graph::label, py::arg("v"))
        .def_property_readonly("self_loops_dropped", &Graph::self_loops_dropped)
        .def_property_readonly("duplicate_edges_dropped",
                               &Graph::duplicate_edges_dropped)
        .def("__repr__", [](const Graph &g) {
            return "<kdelta.Graph n=" + std::to_string(g.num_vertices()) +
                   " edges=" + std::to_string(g.num_edges()) + ">";
        });

    py::class_<EnumerationStats>(m, "EnumerationStats")
        .def_readonly("solutions", &EnumerationStats::solutions)
        .def_readonly("calls_total", &EnumerationStats::calls_total)
        .def_readonly("max_calls_between_outputs",
                      &EnumerationStats::max_calls_between_outputs)
        .def_readonly("max_delay_seconds", &EnumerationStats::max_delay_seconds)
        .def_readonly("wall_seconds", &EnumerationStats::wall_seconds)
        .def_readonly("top_level_calls", &EnumerationStats::top_level_calls)
        .def_readonly("aborted", &EnumerationStats::aborted);

    m.def(
        "parse_graph",
        [](const std::string &text, const std::string &format) {
            GraphFormat fmt = GraphFormat::auto_detect;
            if (format == "edge_list")
                fmt = GraphFormat::edge_list;
            else if (format == "matrix_market")
                fmt = GraphFormat::matrix_market;
            else if (format != "auto")
                throw std::invalid_argument("unknown format: " + format);
            return parse_graph(text, fmt);
        },
        py::arg("text"), py::arg("format") = "auto");
    m.def("load_graph",
          [](const std::string &path) { return load_graph(path); },
          py::arg("path"));
    m.def("generate_graph",
          [](const std::string &spec) { return generate_graph(spec); },
          py::arg("spec"));

    m.def("connected_components", &connected_components, py::arg("g"));
    m.def("max_degree", &max_degree, py::arg("g"));
    m.def(
        "induced_is_connected",
        [](const Graph &g, const std::vector<VertexId> &vs) {
            return induced_is_connected(g, vs);
        },
        py::arg("g"), py::arg("vertices"));
    m.def("count_upper_bound", &count_upper_bound, py::arg("n"),
          py::arg("delta"), py::arg("k"));

    m.def(
        "enumerate_k_subgraphs",
        [](const Graph &g, int k) { return run_collect(g, k, false); },
        py::arg("g"), py::arg("k"),
        "All connected induced size-k vertex sets (each sorted), in emission "
        "order.");
    m.def(
        "enumerate_stats",
        [](const Graph &g, int k) {
            return enumerate_k_subgraphs(
                g, k, [](std::span<const VertexId>, std::uint64_t) { return true; });
        },
        py::arg("g"), py::arg("k"), "Instrumented run discarding solutions.");
    m.def(
        "simple_enumerate",
        [](const Graph &g, int k) { return run_collect(g, k, true); },
        py::arg("g"), py::arg("k"));
    m.def(
        "brute_force_enumerate",
        [](const Graph &g, int k, std::uint64_t cap) {
            return brute_force_enumerate(g, k, cap);
        },
        py::arg("g"), py::arg("k"), py::arg("subset_cap") = 50'000'000);
}
