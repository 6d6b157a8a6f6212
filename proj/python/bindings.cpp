#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gnkb/bounds.hpp"
#include "gnkb/core_graph.hpp"
#include "gnkb/errors.hpp"
#include "gnkb/geometry.hpp"
#include "gnkb/hypergraph.hpp"
#include "gnkb/numbering.hpp"
#include "gnkb/solver.hpp"
#include "gnkb/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python layer turns them into Fractions.
using Edges = std::vector<std::vector<int>>;

gnkb::Params params(int n, int k, int b) {
  gnkb::Params p{n, k, b};
  p.validate();
  return p;
}

gnkb::Hypergraph hypergraph(int m, const Edges& edges) { return gnkb::Hypergraph(m, edges); }

std::vector<std::pair<int, int>> graph_edges(const gnkb::SimpleGraph& g) { return g.edges(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bandwidth of the span-bounded subset graphs G(n, k, b)";

  auto base = py::register_exception<gnkb::Error>(m, "GnkbError", PyExc_ValueError);
  py::register_exception<gnkb::CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<gnkb::RegimeError>(m, "RegimeError", base.ptr());

  m.def("vertex_count", [](int n, int k, int b) { return gnkb::vertex_count_formula(params(n, k, b)); },
        "n"_a, "k"_a, "b"_a);
  m.def("central_count", [](int n, int k, int b) { return gnkb::central_count(params(n, k, b)); },
        "n"_a, "k"_a, "b"_a);
  m.def("edge_count", [](int n, int k, int b) { return gnkb::edge_count(params(n, k, b)); }, "n"_a, "k"_a, "b"_a);
  m.def("diameter", [](int n, int k, int b) { return gnkb::diameter(params(n, k, b)); }, "n"_a, "k"_a, "b"_a);
  m.def("vertices", [](int n, int k, int b) {
    std::vector<std::vector<int>> out;
    for (const auto& v : gnkb::enumerate_vertices(params(n, k, b))) out.push_back(v.elements());
    return out;
  }, "n"_a, "k"_a, "b"_a, "All vertices in lexicographic order.");

  m.def("chvatal_lower_bound", [](int n, int k, int b) { return gnkb::chvatal_lower_bound(params(n, k, b)); },
        "n"_a, "k"_a, "b"_a);
  m.def("central_lower_bound", [](int n, int k, int b) { return gnkb::central_lower_bound(params(n, k, b)); },
        "n"_a, "k"_a, "b"_a);
  m.def("lex_upper_bound", [](int n, int k, int b) { return gnkb::lex_upper_bound_value(params(n, k, b)); },
        "n"_a, "k"_a, "b"_a);
  m.def("theorem1a_value", [](int n, int k, int b) { return gnkb::theorem1a_value(params(n, k, b)); },
        "n"_a, "k"_a, "b"_a);

  m.def("classify_case", [](const std::string& beta) {
    auto d = gnkb::classify_case(gnkb::parse_rational(beta));
    return py::dict("beta"_a = gnkb::to_string(d.beta), "q"_a = d.q, "r"_a = gnkb::to_string(d.r),
                    "case"_a = gnkb::to_string(d.which));
  }, "beta"_a);
  m.def("coefficients", [](const std::string& beta, int k) {
    auto c = gnkb::coefficients(gnkb::parse_rational(beta), k);
    return py::make_tuple(gnkb::to_string(c.c1), gnkb::to_string(c.c2), gnkb::to_string(c.c3));
  }, "beta"_a, "k"_a);
  m.def("theorem2_interval", [](const std::string& beta, int k) {
    auto [lo, hi] = gnkb::theorem2_interval(gnkb::parse_rational(beta), k);
    return py::make_tuple(gnkb::to_string(lo), gnkb::to_string(hi));
  }, "beta"_a, "k"_a);
  m.def("unknown_set_measure", [](long q_max) { return gnkb::to_string(gnkb::unknown_set_measure(q_max)); },
        "q_max"_a);
  m.def("unknown_set_measure_float", [](long q_max) { return gnkb::unknown_set_measure(q_max).get_d(); },
        "q_max"_a, "Nearest double; the exact value has very long numerators at large q_max.");

  m.def("numbering", [](int n, int k, int b, const std::string& method) {
    auto f = gnkb::make_numbering(params(n, k, b), gnkb::parse_method(method));
    std::vector<std::vector<int>> out;
    for (auto i : f.order()) out.push_back(f.vertices()[i].elements());
    return out;
  }, "n"_a, "k"_a, "b"_a, "method"_a, "Vertices in label order 1..|V|.");
  m.def("numbering_bandwidth", [](int n, int k, int b, const std::string& method) {
    return gnkb::bandwidth_of_numbering(gnkb::make_numbering(params(n, k, b), gnkb::parse_method(method)));
  }, "n"_a, "k"_a, "b"_a, "method"_a);

  m.def("certify", [](int n, int k, int b, int solver_cap) {
    auto c = gnkb::certify(params(n, k, b), solver_cap);
    py::object solver = c.solver_value ? py::object(py::int_(*c.solver_value)) : py::object(py::none());
    return py::dict("lower"_a = c.lower, "upper"_a = c.upper, "exact"_a = c.exact,
                    "method"_a = gnkb::to_string(c.witness.method()), "solver"_a = solver);
  }, "n"_a, "k"_a, "b"_a, "solver_cap"_a = 24);

  m.def("exact_bandwidth", [](int vertex_count, const std::vector<std::pair<int, int>>& edges, int cap) {
    gnkb::SimpleGraph g(vertex_count);
    for (auto [u, v] : edges) g.add_edge(u, v);
    auto r = gnkb::exact_bandwidth(g, cap);
    return py::make_tuple(r.width, r.order);
  }, "vertex_count"_a, "edges"_a, "cap"_a = 24, "Exact bandwidth and an optimal order.");

  m.def("polygon_measure", [](const std::vector<std::pair<std::string, std::string>>& pts, int k) {
    gnkb::Polygon poly;
    for (const auto& [x, y] : pts) poly.vertices.push_back({gnkb::parse_rational(x), gnkb::parse_rational(y)});
    return gnkb::to_string(gnkb::polygon_measure(poly, k));
  }, "vertices"_a, "k"_a);

  m.def("two_section", [](int m_, const Edges& e) { return graph_edges(gnkb::two_section(hypergraph(m_, e))); },
        "vertex_count"_a, "edges"_a);
  m.def("weak_edge_clique_graph", [](int m_, const Edges& e) {
    auto g = gnkb::weak_edge_clique_graph(hypergraph(m_, e));
    return py::make_tuple(g.vertex_count(), graph_edges(g));
  }, "vertex_count"_a, "edges"_a);
  m.def("weak_edge_clique_cover_number", [](int m_, const Edges& e) {
    return gnkb::weak_edge_clique_cover_number(hypergraph(m_, e));
  }, "vertex_count"_a, "edges"_a);
  m.def("check_proposition1", [](int m_, const Edges& e) { return gnkb::check_proposition1(hypergraph(m_, e)); },
        "vertex_count"_a, "edges"_a);
  m.def("maximal_banded_hypergraph", [](int n, int k, int b) {
    auto h = gnkb::maximal_banded_hypergraph(params(n, k, b));
    return py::make_tuple(h.vertex_count(), h.edges());
  }, "n"_a, "k"_a, "b"_a);

  m.def("suite_names", &gnkb::suite_names);
  m.def("run_suite", [](const std::string& name, int random, std::uint64_t seed) {
    gnkb::SuiteReport rep;
    {
      py::gil_scoped_release release;
      rep = gnkb::run_suite(name, gnkb::VerifyOptions{random, seed});
    }
    py::list rows;
    for (const auto& r : rep.rows) rows.append(py::make_tuple(r.instance, r.pass, r.detail));
    return py::make_tuple(rep.passed(), rows);
  }, "name"_a, "random"_a = 500, "seed"_a = 7);
}
