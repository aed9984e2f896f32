#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "degstab/corpus.hpp"
#include "degstab/deciders.hpp"
#include "degstab/error.hpp"
#include "degstab/io.hpp"
#include "degstab/lagrangian.hpp"
#include "degstab/oracles.hpp"

namespace py = pybind11;
using namespace degstab;

namespace {

std::vector<std::vector<Vertex>> classes_of(const std::optional<Partition>& p) {
    if (!p) return {};
    return p->classes();
}

OptConfig opt_config(int restarts, std::uint64_t seed, bool closed_forms) {
    OptConfig cfg;
    cfg.restarts = restarts;
    cfg.seed = seed;
    cfg.closed_forms = closed_forms;
    return cfg;
}

DeciderConfig decider_config(double eps, std::optional<std::size_t> n_small, bool strict) {
    DeciderConfig cfg;
    cfg.eps = eps;
    cfg.n_small = n_small;
    cfg.strict = strict;
    return cfg;
}

py::dict report_dict(const OptReport& r) {
    py::dict d;
    d["value"] = r.value;
    d["argmax"] = std::vector<double>(r.argmax.coords().begin(), r.argmax.coords().end());
    d["converged"] = r.converged;
    d["restarts_used"] = r.restarts_used;
    std::vector<std::vector<double>> w;
    for (const auto& p : r.witness_set) w.emplace_back(p.coords().begin(), p.coords().end());
    d["witness_set"] = w;
    d["exact"] = r.exact ? py::object(py::str(r.exact->str())) : py::object(py::none());
    return d;
}

}  // namespace

PYBIND11_MODULE(_degstab, m) {
    m.doc() = "Degree-threshold deciders for dense uniform hypergraphs";

    static py::exception<Error> error(m, "DegstabError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
        }
    });

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init<int, std::size_t, const std::vector<Edge>&>(), py::arg("r"), py::arg("n"), py::arg("edges"))
        .def_property_readonly("r", &Hypergraph::uniformity)
        .def_property_readonly("n", &Hypergraph::order)
        .def("__len__", &Hypergraph::size)
        .def("edges", &Hypergraph::edge_list)
        .def("degree", &Hypergraph::degree)
        .def("min_degree", &Hypergraph::min_degree)
        .def("max_degree", &Hypergraph::max_degree)
        .def("link", &Hypergraph::link)
        .def("hamming_distance", &Hypergraph::hamming_distance)
        .def("has_edge", [](const Hypergraph& h, const Edge& e) { return h.has_edge(e); })
        .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
        .def("__str__", [](const Hypergraph& h) { return serialize(h); })
        .def("__repr__", [](const Hypergraph& h) {
            std::ostringstream os;
            os << "Hypergraph(r=" << h.uniformity() << ", n=" << h.order() << ", m=" << h.size() << ")";
            return os.str();
        });

    py::class_<Pattern>(m, "Pattern")
        .def(py::init(&Pattern::from_multisets), py::arg("r"), py::arg("ell"), py::arg("edges"),
             "Edges as lists of 0-based labels; a repeated label is a multiplicity.")
        .def_property_readonly("r", &Pattern::uniformity)
        .def_property_readonly("ell", &Pattern::vertex_count)
        .def("__len__", &Pattern::size)
        .def("edges", &Pattern::edges)
        .def("is_complete", &Pattern::is_complete)
        .def("__str__", [](const Pattern& p) { return serialize(p); });

    m.def("complete_pattern", &complete_pattern, py::arg("ell"), py::arg("r") = 2);
    m.def("cycle_pattern", &cycle_pattern);
    m.def("path_pattern", &path_pattern);

    py::class_<Decision>(m, "Decision")
        .def_property_readonly("verdict", [](const Decision& d) { return to_string(d.verdict); })
        .def_property_readonly("witness", [](const Decision& d) { return classes_of(d.witness); })
        .def_readonly("violating_edge", &Decision::violating_edge)
        .def_readonly("stuck_vertex", &Decision::stuck_vertex)
        .def_readonly("reason", &Decision::reason)
        .def_readonly("peel_order", &Decision::peel_order)
        .def_property_readonly("stats",
                               [](const Decision& d) {
                                   py::dict s;
                                   s["distance_evaluations"] = d.stats.distance_evaluations;
                                   s["work"] = d.stats.work;
                                   s["edge_checks"] = d.stats.edge_checks;
                                   s["peeled"] = d.stats.peeled;
                                   s["used_oracle"] = d.stats.used_oracle;
                                   return s;
                               })
        .def("__bool__", [](const Decision& d) { return d.verdict == Verdict::Yes; })
        .def("__repr__", [](const Decision& d) { return std::string("Decision(") + to_string(d.verdict) + ")"; });

    m.def(
        "decide_k_colorable",
        [](const Hypergraph& g, int ell, double eps, std::optional<std::size_t> n_small, bool strict) {
            return decide_k_colorable(g, ell, decider_config(eps, n_small, strict));
        },
        py::arg("g"), py::arg("ell"), py::arg("eps") = 0.0, py::arg("n_small") = py::none(), py::arg("strict") = true);
    m.def(
        "decide_hom_minimal",
        [](const Hypergraph& h, const Pattern& p, double eps, std::optional<std::size_t> n_small, bool strict) {
            return decide_hom_minimal(h, p, decider_config(eps, n_small, strict));
        },
        py::arg("h"), py::arg("pattern"), py::arg("eps") = 0.0, py::arg("n_small") = py::none(),
        py::arg("strict") = true);
    m.def(
        "decide_shom_rigid",
        [](const Hypergraph& h, const Pattern& p, double eps, std::optional<std::size_t> n_small, bool strict) {
            return decide_shom_rigid(h, p, decider_config(eps, n_small, strict));
        },
        py::arg("h"), py::arg("pattern"), py::arg("eps") = 0.0, py::arg("n_small") = py::none(),
        py::arg("strict") = true);
    m.def(
        "embed_min_decide",
        [](const Hypergraph& h, const Hypergraph& f, const Pattern& p, double eps, std::optional<std::size_t> n_small,
           bool strict) { return embed_min_decide(h, f, p, decider_config(eps, n_small, strict)); },
        py::arg("h"), py::arg("forbidden"), py::arg("pattern"), py::arg("eps") = 0.0, py::arg("n_small") = py::none(),
        py::arg("strict") = true);
    m.def(
        "clique_avg_decide", [](const Hypergraph& g, int ell, std::uint64_t k) { return clique_avg_decide(g, ell, k); },
        py::arg("g"), py::arg("ell"), py::arg("k"));
    m.def(
        "hamming_clustering",
        [](const Hypergraph& h, int ell, std::int64_t num, std::int64_t den) {
            auto c = hamming_clustering(h, ell, Rational(num, den));
            return py::make_tuple(c.partition.classes(), c.seeds, c.distance_evaluations);
        },
        py::arg("h"), py::arg("ell"), py::arg("num"), py::arg("den"),
        "Returns (classes, seeds, distance_evaluations) for radius floor(num/den * n^(r-1)).");

    m.def(
        "lagrangian",
        [](const Pattern& p, int restarts, std::uint64_t seed, bool closed_forms) {
            return report_dict(lagrangian(p, opt_config(restarts, seed, closed_forms)));
        },
        py::arg("pattern"), py::arg("restarts") = 64, py::arg("seed") = OptConfig{}.seed, py::arg("closed_forms") = true);
    m.def(
        "phi",
        [](const Pattern& p, int restarts, std::uint64_t seed, bool closed_forms) {
            return report_dict(phi(p, opt_config(restarts, seed, closed_forms)));
        },
        py::arg("pattern"), py::arg("restarts") = 64, py::arg("seed") = OptConfig{}.seed, py::arg("closed_forms") = true);
    m.def("rigidity", [](const Pattern& p) {
        auto r = rigidity_report(p);
        auto mini = is_minimal(p);
        py::dict d;
        d["Phi"] = r.Phi;
        d["phi"] = r.phi;
        d["rigid"] = r.rigid;
        d["minimal"] = mini.minimal;
        d["numerical"] = r.numerical;
        d["reason"] = r.reason;
        return d;
    });
    m.def("has_twins", &has_twins);
    m.def("lagrange_eval", [](const Pattern& p, std::vector<double> x) { return lagrange_value(p, x); });
    m.def("lagrange_grad", [](const Pattern& p, std::vector<double> x) { return lagrange_gradient(p, x); });

    m.def("turan_graph", &turan_graph);
    m.def("turan_number", &turan_number);
    m.def("pattern_blowup", &pattern_blowup);
    m.def("join_construction", &join_construction);
    m.def("delete_random_edges", &delete_random_edges);
    m.def(
        "plant_violation",
        [](const Hypergraph& h, const std::vector<std::size_t>& sizes, std::uint64_t seed) {
            return plant_violation(h, block_partition(sizes), seed);
        },
        py::arg("h"), py::arg("class_sizes"), py::arg("seed"), "Classes are consecutive blocks of the given sizes.");
    m.def("catalog", [](const std::string& name, int k, int t, int r) { return catalog(name, {k, t, r, {}}); },
          py::arg("name"), py::arg("k") = 3, py::arg("t") = 2, py::arg("r") = 3);

    m.def("find_embedding", [](const Hypergraph& f, const Hypergraph& h) { return find_embedding(f, h); });
    m.def(
        "find_homomorphism",
        [](const Hypergraph& h, const Pattern& p, bool surjective) { return find_homomorphism(h, p, surjective); },
        py::arg("h"), py::arg("pattern"), py::arg("surjective") = false);

    m.def("parse_hypergraph", py::overload_cast<const std::string&>(&parse_hypergraph));
    m.def("parse_pattern", py::overload_cast<const std::string&>(&parse_pattern));
}
