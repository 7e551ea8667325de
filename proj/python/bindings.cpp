// Python bindings for the core operations: graph construction, metric
// predicates, products, formats, verification checks and the hunter.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dpgraph/catalog.hpp"
#include "dpgraph/graph6.hpp"
#include "dpgraph/metric.hpp"
#include "dpgraph/products.hpp"
#include "dpgraph/verify.hpp"
#include "dpgraph/version.hpp"

namespace py = pybind11;
using namespace dpgraph;

namespace {

VertexSet to_vertex_set(int universe, const std::vector<Vertex>& members) {
    return VertexSet(universe, members);
}

// Distances as None-able ints so unreachable pairs are unmistakable.
std::vector<std::vector<std::optional<int>>> distance_rows(const Graph& g) {
    const DistanceMatrix dist = bfs_distances(g);
    std::vector<std::vector<std::optional<int>>> rows(static_cast<size_t>(g.order()));
    for (Vertex u = 0; u < g.order(); ++u) {
        rows[u].reserve(static_cast<size_t>(g.order()));
        for (Vertex v = 0; v < g.order(); ++v) {
            const Dist d = dist.at(u, v);
            rows[u].push_back(d == kUnreachable ? std::nullopt : std::optional<int>(d));
        }
    }
    return rows;
}

std::optional<int> optional_dist(Dist d) {
    return d == kUnreachable ? std::nullopt : std::optional<int>(d);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "distance-preserving graph toolkit";
    m.attr("__version__") = kVersion;

    py::register_exception<Error>(m, "Error");

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int order, const std::vector<std::pair<int, int>>& edges,
                         const std::string& label) { return build_graph(order, edges, label); }),
             py::arg("order"), py::arg("edges") = std::vector<std::pair<int, int>>{},
             py::arg("label") = std::string())
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property("label", &Graph::label, &Graph::set_label)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__len__", &Graph::order)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream out;
            out << "Graph(order=" << g.order() << ", edges=" << g.edge_count();
            if (!g.label().empty()) out << ", label='" << g.label() << "'";
            out << ")";
            return out.str();
        });

    m.def("path_graph", &path_graph, py::arg("n"));
    m.def("cycle_graph", &cycle_graph, py::arg("n"));
    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def("empty_graph", &empty_graph, py::arg("n"));
    m.def("c7_with_pendant", &c7_with_pendant);

    m.def(
        "induce",
        [](const Graph& g, const std::vector<Vertex>& vertices) {
            const InducedSubgraph sub = induce(g, to_vertex_set(g.order(), vertices));
            return py::make_tuple(sub.graph, sub.to_host);
        },
        py::arg("graph"), py::arg("vertices"),
        "Induced subgraph re-indexed to 0..k-1, plus the map back to host vertices.");

    m.def("bfs_distances", &distance_rows, py::arg("graph"),
          "All-pairs distances; None marks unreachable pairs.");
    m.def("is_connected", &is_connected, py::arg("graph"));
    m.def(
        "diameter", [](const Graph& g) { return optional_dist(diameter(g)); }, py::arg("graph"),
        "Largest finite distance, or None when the graph is disconnected.");
    m.def(
        "eccentricity",
        [](const Graph& g, Vertex v) { return optional_dist(eccentricity(g, v)); },
        py::arg("graph"), py::arg("v"));

    py::class_<DpSpectrum>(m, "DpSpectrum")
        .def_readonly("host_order", &DpSpectrum::host_order)
        .def_readonly("achievable", &DpSpectrum::achievable)
        .def("is_full", &DpSpectrum::is_full)
        .def("missing_orders", &DpSpectrum::missing_orders)
        .def("__repr__", [](const DpSpectrum& s) {
            std::ostringstream out;
            out << "DpSpectrum(host_order=" << s.host_order << ", achievable={";
            bool first = true;
            for (int k : s.achievable) {
                if (!first) out << ",";
                out << k;
                first = false;
            }
            out << "})";
            return out.str();
        });

    m.def(
        "is_isometric",
        [](const Graph& host, const std::vector<Vertex>& vertices) {
            return is_isometric(host, to_vertex_set(host.order(), vertices));
        },
        py::arg("host"), py::arg("vertices"));
    m.def("dp_spectrum", &dp_spectrum, py::arg("graph"));
    m.def("is_dp", &is_dp, py::arg("graph"));
    m.def(
        "non_dp_interval_pairs",
        [](const DpSpectrum& spec) {
            std::vector<std::pair<int, int>> out;
            for (const NonDpIntervalPair& gap : non_dp_interval_pairs(spec)) {
                out.emplace_back(gap.a, gap.b);
            }
            return out;
        },
        py::arg("spectrum"));
    m.def(
        "removal_set_family",
        [](const Graph& g, int max_size, bool require_nonempty_remainder) {
            std::vector<std::vector<Vertex>> out;
            for (const VertexSet& s :
                 removal_set_family(g, max_size, require_nonempty_remainder).sets) {
                out.push_back(s.members());
            }
            return out;
        },
        py::arg("graph"), py::arg("max_size"), py::arg("require_nonempty_remainder") = false);
    m.def("sdp_sequence", &sdp_sequence, py::arg("graph"),
          "A witnessing deletion order, or None when the graph is not sdp.");
    m.def("is_sdp", &is_sdp, py::arg("graph"));

    py::class_<ProductGraph>(m, "ProductGraph")
        .def_readonly("graph", &ProductGraph::underlying)
        .def_readonly("left_order", &ProductGraph::left_order)
        .def_readonly("right_order", &ProductGraph::right_order)
        .def_property_readonly(
            "kind",
            [](const ProductGraph& p) { return p.kind == ProductKind::Lex ? "lex" : "cart"; })
        .def("encode", &ProductGraph::encode, py::arg("u"), py::arg("x"))
        .def("decode", &ProductGraph::decode, py::arg("index"));

    m.def("lex_product", &lex_product, py::arg("g"), py::arg("h"));
    m.def("cart_product", &cart_product, py::arg("g"), py::arg("h"));
    m.def(
        "lex_distance",
        [](const Graph& g, const Graph& h, Vertex u, Vertex v, Vertex x, Vertex y) {
            return lex_distance(bfs_distances(g), h, u, v, x, y);
        },
        py::arg("g"), py::arg("h"), py::arg("u"), py::arg("v"), py::arg("x"), py::arg("y"));
    m.def(
        "cart_distance",
        [](const Graph& g, const Graph& h, Vertex u, Vertex v, Vertex x, Vertex y) {
            return optional_dist(cart_distance(bfs_distances(g), bfs_distances(h), u, v, x, y));
        },
        py::arg("g"), py::arg("h"), py::arg("u"), py::arg("v"), py::arg("x"), py::arg("y"));
    m.def(
        "project",
        [](const std::vector<Vertex>& vertices, const ProductGraph& product) {
            return project(VertexSet(product.order(), vertices), product).members();
        },
        py::arg("vertices"), py::arg("product"));
    m.def(
        "geodesic_factorization_check",
        [](const ProductGraph& product, const Graph& left, const Graph& right,
           const std::vector<Vertex>& path) {
            return geodesic_factorization_check(product, left, right, path);
        },
        py::arg("product"), py::arg("left"), py::arg("right"), py::arg("path"));

    m.def(
        "parse_graph6", [](const std::string& line) { return parse_graph6(line); },
        py::arg("line"));
    m.def("serialize_graph6", &serialize_graph6, py::arg("graph"));
    m.def(
        "parse_edge_list",
        [](const std::string& text, bool one_indexed) {
            std::istringstream in(text);
            return parse_edge_list(in, one_indexed);
        },
        py::arg("text"), py::arg("one_indexed") = false);
    m.def("serialize_edge_list", &serialize_edge_list, py::arg("graph"));
    m.def("to_dot", &to_dot, py::arg("graph"));

    m.def("connected_graphs_up_to", &connected_graphs_up_to, py::arg("max_order"));
    m.def("all_graphs_up_to", &all_graphs_up_to, py::arg("max_order"));
    m.def("are_isomorphic", &are_isomorphic, py::arg("a"), py::arg("b"));

    py::class_<Failure>(m, "Failure")
        .def_readonly("input", &Failure::input)
        .def_readonly("expected", &Failure::expected)
        .def_readonly("got", &Failure::got);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("claim_id", &VerificationReport::claim_id)
        .def_readonly("instances_checked", &VerificationReport::instances_checked)
        .def_readonly("failures", &VerificationReport::failures)
        .def_readonly("elapsed_seconds", &VerificationReport::elapsed_seconds)
        .def_readonly("sampled", &VerificationReport::sampled)
        .def_readonly("seed", &VerificationReport::seed)
        .def("holds", &VerificationReport::holds);

    m.def(
        "check_eq1", [](const Graph& g, const Graph& h) { return check_eq1(g, h); }, py::arg("g"),
        py::arg("h"));
    m.def(
        "check_corollary_fiber",
        [](const Graph& g, const Graph& h) { return check_corollary_fiber(g, h); }, py::arg("g"),
        py::arg("h"));
    m.def(
        "thm1_criterion",
        [](const std::set<int>& achievable, int host_order, int n) {
            DpSpectrum spec;
            spec.host_order = host_order;
            spec.achievable = achievable;
            return thm1_criterion(spec, n);
        },
        py::arg("achievable"), py::arg("host_order"), py::arg("n"));
    m.def(
        "check_thm1",
        [](const std::vector<Graph>& gs, const std::vector<Graph>& hs, int jobs) {
            VerifyOptions opts;
            opts.jobs = jobs;
            return check_thm1(gs, hs, opts);
        },
        py::arg("catalog_g"), py::arg("catalog_h"), py::arg("jobs") = 1);
    m.def(
        "check_cart_isometry_lemma",
        [](const std::vector<Graph>& gs, const std::vector<Graph>& hs) {
            return check_cart_isometry_lemma(gs, hs);
        },
        py::arg("catalog_g"), py::arg("catalog_h"));
    m.def(
        "check_removal_lemma",
        [](const std::vector<Graph>& gs, const std::vector<Graph>& hs) {
            return check_removal_lemma(gs, hs);
        },
        py::arg("catalog_g"), py::arg("catalog_h"));
    m.def(
        "check_thm2",
        [](const std::vector<Graph>& gs, const std::vector<Graph>& hs, int max_product_order) {
            return check_thm2(gs, hs, max_product_order);
        },
        py::arg("catalog_g"), py::arg("catalog_h"), py::arg("max_product_order") = 16);

    py::class_<CounterexampleRecord>(m, "CounterexampleRecord")
        .def_readonly("left", &CounterexampleRecord::left)
        .def_readonly("right", &CounterexampleRecord::right)
        .def_readonly("product_spectrum", &CounterexampleRecord::product_spectrum)
        .def_readonly("missing_orders", &CounterexampleRecord::missing_orders);

    py::class_<HuntReport>(m, "HuntReport")
        .def_readonly("pairs_checked", &HuntReport::pairs_checked)
        .def_readonly("candidates_left", &HuntReport::candidates_left)
        .def_readonly("candidates_right", &HuntReport::candidates_right)
        .def_readonly("elapsed_seconds", &HuntReport::elapsed_seconds)
        .def_readonly("counterexamples", &HuntReport::counterexamples)
        .def("consistent", &HuntReport::consistent);

    m.def(
        "hunt_conjecture",
        [](int max_left, int max_right, int cap, int jobs) {
            HuntOptions opts;
            opts.product_order_cap = cap;
            opts.jobs = jobs;
            return hunt_conjecture(max_left, max_right, opts);
        },
        py::arg("max_left"), py::arg("max_right"), py::arg("cap") = 20, py::arg("jobs") = 1);
}
