#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wsc/complex.hpp"
#include "wsc/enumeration.hpp"
#include "wsc/games.hpp"
#include "wsc/generators.hpp"
#include "wsc/io.hpp"
#include "wsc/orderings.hpp"
#include "wsc/recognition.hpp"
#include "wsc/suites.hpp"
#include "wsc/symmetry.hpp"

namespace py = pybind11;
using namespace wsc;

namespace {

py::dict report_to_dict(const RecognitionReport& rep) {
    py::dict verdicts, witnesses;
    for (const auto& [cond, res] : rep.verdicts) {
        verdicts[to_string(cond)] = res.holds;
        if (!res.holds) witnesses[to_string(cond)] = res.witness;
    }
    py::dict out;
    out["classification"] = std::string(to_string(rep.classification));
    out["weakly_bridged"] = rep.weakly_bridged();
    out["bridged"] = rep.bridged();
    out["verdicts"] = verdicts;
    out["witnesses"] = witnesses;
    out["isometric_cycle"] = rep.long_isometric_cycle;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "weakly bridged graph toolkit";

    py::class_<VertexSet>(m, "VertexSet")
        .def("to_list", &VertexSet::to_vector)
        .def("__len__", &VertexSet::count)
        .def("__contains__", &VertexSet::test)
        .def("__repr__", &VertexSet::to_string);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<Edge>&, bool>(), py::arg("n"), py::arg("edges"),
             py::arg("require_connected") = true)
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("neighbors", &Graph::neighbors)
        .def("distance", &Graph::distance)
        .def("diameter", &Graph::diameter)
        .def("radius", &Graph::radius)
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
        });

    // metric primitives
    m.def("interval", &interval);
    m.def("ball", py::overload_cast<const Graph&, int, int>(&ball));
    m.def("ball_of_set", [](const Graph& g, const std::vector<int>& c, int r) {
        return ball(g, VertexSet::from(g.vertex_count(), c), r);
    });
    m.def("sphere", py::overload_cast<const Graph&, int, int>(&sphere));
    m.def("is_convex", [](const Graph& g, const std::vector<int>& s) {
        return is_convex(g, VertexSet::from(g.vertex_count(), s));
    });
    m.def("convex_hull", [](const Graph& g, const std::vector<int>& s) {
        return convex_hull(g, VertexSet::from(g.vertex_count(), s));
    });
    m.def("induced_cycles", &induced_cycles);
    m.def("is_isometric_cycle", &is_isometric_cycle);

    // recognition
    m.def("classify", [](const Graph& g) { return report_to_dict(classify(g)); });

    // orderings
    py::class_<TraversalRecord>(m, "TraversalRecord")
        .def_readonly("root", &TraversalRecord::root)
        .def_readonly("order", &TraversalRecord::order)
        .def_readonly("alpha", &TraversalRecord::alpha)
        .def_readonly("father", &TraversalRecord::father)
        .def_readonly("labels", &TraversalRecord::label_history)
        .def("elimination_order", &TraversalRecord::elimination_order);

    m.def("lexbfs", [](const Graph& g, int root, const std::string& tie, std::uint64_t seed) {
        return lexbfs(g, root, tie == "random" ? TieBreak::seeded_random : TieBreak::lowest_id, seed);
    }, py::arg("g"), py::arg("root") = 0, py::arg("tie_break") = "lowest", py::arg("seed") = 0);
    m.def("bfs", [](const Graph& g, int root, const std::vector<int>& priority) { return bfs(g, root, priority); },
          py::arg("g"), py::arg("root") = 0, py::arg("priority") = std::vector<int>{});
    m.def("verify_dismantling", [](const Graph& g, const std::vector<int>& order) {
        auto r = verify_dismantling(g, order);
        return py::make_tuple(r.ok, r.failing_index);
    });
    m.def("greedy_dismantling", [](const Graph& g) -> py::object {
        auto r = greedy_dismantling(g);
        if (!r) return py::none();
        return py::cast(*r);
    });
    m.def("is_dismantlable", &is_dismantlable);
    m.def("verify_father_domination", [](const Graph& g, const TraversalRecord& rec) {
        return verify_father_domination(g, rec).ok;
    });
    m.def("verify_fellow_traveler", [](const Graph& g, const TraversalRecord& rec) {
        return verify_fellow_traveler(g, rec).ok;
    });
    m.def("verify_combing", [](const Graph& g, const TraversalRecord& rec) {
        return verify_combing(g, build_combing(g, rec)).ok;
    });
    m.def("prefix_subgraph", [](const Graph& g, const TraversalRecord& rec, int k) {
        auto sub = prefix_subgraph(g, rec, k);
        return py::make_tuple(sub.graph, sub.vertices);
    });
    m.def("graph_power", &graph_power);

    // games
    m.def("solve_copwin", [](const Graph& g) {
        auto r = solve_copwin(g);
        py::dict out;
        out["copwin"] = r.copwin;
        out["best_start"] = r.best_start;
        if (r.copwin) out["capture_bound"] = r.strategy.capture_bound;
        out["safe_states"] = r.safe_states;
        return out;
    });
    m.def("crosscheck_dismantlable_copwin", &crosscheck_dismantlable_copwin);
    m.def("fixed_clique_of_homomorphism", &fixed_clique_of_homomorphism);

    // complexes
    py::class_<Simplex>(m, "Simplex")
        .def(py::init<std::vector<int>>())
        .def_readonly("verts", &Simplex::verts)
        .def("__repr__", [](const Simplex& s) {
            std::string out = "Simplex([";
            for (std::size_t i = 0; i < s.verts.size(); ++i)
                out += (i ? "," : "") + std::to_string(s.verts[i]);
            return out + "])";
        });

    py::class_<FlagComplex>(m, "FlagComplex")
        .def(py::init<Graph, int>(), py::arg("carrier"), py::arg("dim_cap") = -1)
        .def_property_readonly("carrier", &FlagComplex::carrier)
        .def_property_readonly("dim_cap", &FlagComplex::dim_cap)
        .def_property_readonly("labels", &FlagComplex::labels)
        .def("simplices", [](const FlagComplex& x, int dim) { return x.simplices(dim); })
        .def("all_simplices", &FlagComplex::all_simplices)
        .def("maximal_simplices", &FlagComplex::maximal_simplices)
        .def("clique_number", &FlagComplex::clique_number)
        .def("is_simplex", [](const FlagComplex& x, const std::vector<int>& vs) { return x.is_simplex(vs); });

    m.def("link", &wsc::link);  // qualified: POSIX link() shadows the name
    m.def("is_cone", [](const FlagComplex& x) {
        auto r = is_cone(x);
        return py::make_tuple(r.cone, r.apex);
    });
    m.def("check_sdn", [](const FlagComplex& x, const std::vector<int>& base, const std::string& mode) {
        SdnMode m_ = mode == "vertex" ? SdnMode::vertex_condition
                   : mode == "edge"   ? SdnMode::edge_condition
                                      : SdnMode::all_simplices;
        auto r = check_sdn(x, Simplex(base), m_);
        py::dict out;
        out["ok"] = r.ok;
        if (!r.ok) {
            out["radius"] = r.witness.radius;
            out["sigma"] = r.witness.sigma.verts;
            out["descent"] = r.witness.descent;
        }
        return out;
    }, py::arg("x"), py::arg("base"), py::arg("mode") = "all");
    m.def("check_sdn_maximal", [](const FlagComplex& x) { return check_sdn_maximal(x).ok; });
    m.def("check_edge_descent", [](const FlagComplex& x, const std::vector<int>& s) {
        return check_edge_descent(x, Simplex(s)).ok;
    });
    m.def("check_big_ball_convex", [](const FlagComplex& x, const std::vector<int>& s) {
        return check_big_ball_convex(x, Simplex(s)).ok;
    });
    m.def("k_set", [](const FlagComplex& x, const std::vector<int>& s, int i) { return k_set(x, Simplex(s), i); });
    m.def("check_k_descent", [](const FlagComplex& x, const std::vector<int>& s) {
        return check_k_descent(x, Simplex(s)).ok;
    });
    m.def("project_on_convex", [](const FlagComplex& x, const std::vector<int>& s, const std::vector<int>& y) {
        return project_on_convex(x, Simplex(s), VertexSet::from(x.vertex_count(), y)).verts;
    });
    m.def("expand_by_projection", [](const FlagComplex& x, const std::vector<int>& s, const std::vector<int>& y) {
        return expand_by_projection(x, Simplex(s), VertexSet::from(x.vertex_count(), y)).verts;
    });
    m.def("lc_reduce", [](const FlagComplex& x) {
        auto r = lc_reduce(x);
        py::dict out;
        out["success"] = r.success;
        out["steps"] = r.steps;
        out["stuck"] = r.stuck;
        return out;
    });

    // symmetry
    py::class_<PermGroup>(m, "PermGroup")
        .def_static("trivial", &PermGroup::trivial)
        .def_static("from_generators",
                    [](const Graph& g, const std::vector<Permutation>& gens) {
                        return PermGroup::from_generators(g, gens);
                    })
        .def_property_readonly("order", &PermGroup::order)
        .def_property_readonly("elements", &PermGroup::elements)
        .def("orbit", &PermGroup::orbit)
        .def("orbits", &PermGroup::orbits);

    m.def("automorphisms", [](const Graph& g) { return automorphisms(g); });
    m.def("strictly_dominated", &strictly_dominated);
    m.def("invariant_simplex", [](const FlagComplex& x, const PermGroup& grp, int seed) {
        auto cert = invariant_simplex(x, grp, seed);
        py::dict out;
        out["seed"] = cert.seed;
        out["hull"] = cert.hull;
        out["rounds"] = cert.rounds;
        out["simplex"] = cert.simplex.verts;
        out["verified"] = verify_invariant_certificate(x, grp, cert);
        return out;
    });
    m.def("roundness_audit", [](const FlagComplex& x) {
        auto r = roundness_audit(x);
        py::dict out;
        out["diameter"] = r.diameter;
        out["radius"] = r.radius;
        out["round"] = r.round;
        out["core"] = r.core;
        out["farber_holds"] = r.farber_holds;
        return out;
    });

    // generators and io
    m.def("wheel_graph", &wheel_graph);
    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("complete_graph", &complete_graph);
    m.def("systolic_disk", &systolic_disk);
    m.def("random_connected_graph", &random_connected_graph);
    m.def("random_weakly_bridged", &random_weakly_bridged);
    m.def("random_bridged", &random_bridged);
    m.def("parse_graph", [](const std::string& text, const std::string& format) {
        return parse_graph(text, format == "json" ? GraphFormat::json : GraphFormat::edge_list);
    }, py::arg("text"), py::arg("format") = "edge");
    m.def("serialize_graph", [](const Graph& g, const std::string& format) {
        return serialize_graph(g, format == "json" ? GraphFormat::json : GraphFormat::edge_list);
    }, py::arg("g"), py::arg("format") = "edge");
    m.def("witness_dot", &witness_dot);
    m.def("enumerate_connected_graphs", &enumerate_connected_graphs);
    m.def("are_isomorphic", &are_isomorphic);

    // suites
    m.def("suite_names", [] { return suite_names(); });
    m.def("run_suite", [](const std::string& name, std::uint64_t seed, int jobs) {
        auto r = run_suite(name, SuiteOptions{seed, jobs});
        py::dict out;
        out["name"] = r.name;
        out["passed"] = r.passed;
        out["detail"] = r.detail;
        out["seconds"] = r.seconds;
        return out;
    }, py::arg("name"), py::arg("seed") = 1, py::arg("jobs") = 0);
}
