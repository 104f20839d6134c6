#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "turansw/admissible.hpp"
#include "turansw/census.hpp"
#include "turansw/io.hpp"
#include "turansw/paley.hpp"
#include "turansw/special.hpp"
#include "turansw/three_tournament.hpp"

namespace py = pybind11;
using namespace turansw;

namespace {

py::object fraction(const Rational& r) {
    static py::object ctor = py::module_::import("fractions").attr("Fraction");
    return ctor(r.numerator(), r.denominator());
}

std::vector<int> images_of(const Permutation& p) { return p.images(); }

py::dict hypergraph_dict(const Hypergraph& h) {
    py::dict d;
    d["n"] = h.vertex_count();
    d["r"] = h.uniformity();
    d["edges"] = h.edges();
    return d;
}

}  // namespace

PYBIND11_MODULE(_turansw, m) {
    m.doc() = "tournament switching classes, oriented two-graphs and extremal hypergraphs";

    py::class_<Tournament>(m, "Tournament")
        .def(py::init<int>(), py::arg("n"))
        .def_static("from_edges", &Tournament::from_edges)
        .def_static("parse", &parse_tournament_line)
        .def("__len__", &Tournament::size)
        .def("edge_sign", &Tournament::edge_sign)
        .def("has_edge", &Tournament::has_edge)
        .def("set_edge", &Tournament::set_edge)
        .def("switched", py::overload_cast<const std::vector<int>&>(&Tournament::switched, py::const_))
        .def("augmented", &Tournament::augmented)
        .def("induced", &Tournament::induced)
        .def("relabeled",
             [](const Tournament& t, const std::vector<int>& im) {
                 return t.relabeled(Permutation(im));
             })
        .def("in_degree", &Tournament::in_degree)
        .def("out_degree", &Tournament::out_degree)
        .def("canonical_form", [](const Tournament& t) { return py::bytes(
                 std::string(t.canonical_form().begin(), t.canonical_form().end())); })
        .def("automorphisms",
             [](const Tournament& t) {
                 std::vector<std::vector<int>> out;
                 for (const auto& s : t.automorphism_group()) out.push_back(images_of(s));
                 return out;
             })
        .def("__eq__", [](const Tournament& a, const Tournament& b) { return a == b; })
        .def("__str__", [](const Tournament& t) { return to_line(t); })
        .def("__repr__", [](const Tournament& t) { return to_line(t); });

    py::class_<OrientedTwoGraph>(m, "OrientedTwoGraph")
        .def_static("of_tournament", &two_graph_of)
        .def_static("parse", &parse_two_graph_line)
        .def("__len__", &OrientedTwoGraph::size)
        .def("sign", &OrientedTwoGraph::sign)
        .def("is_valid", &OrientedTwoGraph::is_valid)
        .def("restriction", &OrientedTwoGraph::restriction)
        .def("relabeled",
             [](const OrientedTwoGraph& g, const std::vector<int>& im) {
                 return g.relabeled(Permutation(im));
             })
        .def("canonical_form", [](const OrientedTwoGraph& g) {
            auto cf = g.canonical_form();
            return py::bytes(std::string(cf.begin(), cf.end()));
        })
        .def("aut_order", [](const OrientedTwoGraph& g) { return g.automorphism_group().size(); })
        .def("anchored_representative", &anchored_representative)
        .def("class_members", &class_members)
        .def("iso_class_count_formula", &iso_class_count_formula)
        .def("__eq__", [](const OrientedTwoGraph& a, const OrientedTwoGraph& b) { return a == b; })
        .def("__str__", [](const OrientedTwoGraph& g) { return to_line(g); })
        .def("__repr__", [](const OrientedTwoGraph& g) { return to_line(g); });

    py::class_<ThreeTournament>(m, "ThreeTournament")
        .def_static("parse", &parse_three_tournament_line)
        .def_static("random", &random_three_tournament, py::arg("n"), py::arg("seed"))
        .def("__len__", &ThreeTournament::size)
        .def("sign", &ThreeTournament::sign)
        .def("coherent_quadruples",
             [](const ThreeTournament& g) { return hypergraph_dict(coherent_quadruples(g)); })
        .def("aut_order", [](const ThreeTournament& g) { return tri_automorphism_group(g).size(); })
        .def("iso_class_count", &count_tri_iso_classes)
        .def("__eq__", [](const ThreeTournament& a, const ThreeTournament& b) { return a == b; })
        .def("__str__", [](const ThreeTournament& g) { return to_line(g); })
        .def("__repr__", [](const ThreeTournament& g) { return to_line(g); });

    m.def("census", [](int n) {
        auto rep = census_report(n);
        py::dict d;
        d["n"] = rep.n;
        d["tournaments"] = rep.tournament_iso_count;
        d["switching_classes"] = rep.switching_class_iso_count;
        d["aut_histogram"] = rep.aut_order_histogram;
        return d;
    });
    m.def("enumerate_tournaments", &enumerate_tournaments);
    m.def("enumerate_switching_classes", &enumerate_switching_classes);

    m.def("is_special", &is_special);
    m.def("turan_lower_bound", [](const OrientedTwoGraph& g) { return fraction(turan_lower_bound(g)); });
    m.def("find_special", [](int r, bool full_scan, int threads) {
        auto res = find_special(r, full_scan, threads);
        py::list specials;
        for (const auto& sc : res.specials) {
            py::dict d;
            d["two_graph"] = to_line(sc.rep);
            d["aut_order"] = sc.aut_order;
            d["bound"] = fraction(sc.lower_bound);
            d["best"] = sc.is_best;
            specials.append(d);
        }
        py::dict d;
        d["r"] = res.r;
        d["special"] = specials;
        d["classes_scanned"] = res.classes_scanned;
        d["trivial_aut_classes"] = res.trivial_aut_classes;
        d["trivial_aut_specials"] = res.trivial_aut_specials;
        return d;
    }, py::arg("r"), py::arg("full_scan") = false, py::arg("threads") = 0);

    m.def("paley_tournament", &paley_tournament);
    m.def("paley_two_graph", &paley_two_graph);
    m.def("projective_two_graph", &projective_two_graph);
    m.def("special_example_tournament", &special_example_tournament);
    m.def("is_doubly_regular", [](const Tournament& t) {
        auto r = is_doubly_regular(t);
        return py::make_tuple(r.doubly_regular, r.out_degree, r.common_out_count);
    });

    m.def("pattern_hypergraph", [](const OrientedTwoGraph& G, const OrientedTwoGraph& g) {
        return hypergraph_dict(pattern_hypergraph(G, g));
    });
    m.def("expected_subtournaments", [](const OrientedTwoGraph& g, int n) {
        return fraction(expected_class_subtournaments(g, n));
    });
    m.def("sample_subtournaments",
          [](const OrientedTwoGraph& g, int n, long long samples, uint64_t seed, int threads) {
              auto est = sample_class_subtournaments(g, n, samples, seed, threads);
              return py::make_tuple(est.mean, est.std_error);
          },
          py::arg("g"), py::arg("n"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 0);

    m.def("verify_uniqueness", [](int p, int threads) {
        auto rep = verify_uniqueness_theorem(p, threads);
        py::dict d;
        d["p"] = rep.p;
        d["candidates"] = rep.candidates;
        d["extremal_count"] = rep.extremal.size();
        d["convolution_match_count"] = rep.convolution_matches.size();
        d["overall"] = rep.overall;
        return d;
    }, py::arg("p"), py::arg("threads") = 0);
}
