#include "degstab/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "degstab/bench.hpp"
#include "degstab/corpus.hpp"
#include "degstab/deciders.hpp"
#include "degstab/error.hpp"
#include "degstab/io.hpp"
#include "degstab/lagrangian.hpp"
#include "degstab/oracles.hpp"
#include "degstab/report.hpp"

namespace degstab {

namespace {

using nlohmann::json;

std::uint64_t text_digest(const std::string& s) {
    std::uint64_t x = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        x ^= c;
        x *= 0x100000001b3ULL;
    }
    return x;
}

json point_json(const SimplexPoint& p) { return std::vector<double>(p.coords().begin(), p.coords().end()); }

json opt_json(const OptReport& r) {
    json w = json::array();
    for (const auto& p : r.witness_set) w.push_back(point_json(p));
    json out = {{"value", r.value},
                {"argmax", point_json(r.argmax)},
                {"restarts_used", r.restarts_used},
                {"converged", r.converged},
                {"witness_set", w}};
    if (r.exact) out["exact"] = r.exact->str();
    return out;
}

std::string point_text(const SimplexPoint& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
    os << ")";
    return os.str();
}

int verdict_code(Verdict v) {
    switch (v) {
        case Verdict::Yes: return kExitYes;
        case Verdict::No: return kExitNo;
        case Verdict::PreconditionViolated: return kExitPrecondition;
    }
    return kExitError;
}

struct Globals {
    std::string format = "json";
    std::uint64_t seed = 1;
    double eps = 0.0;
    std::optional<std::size_t> n_small;
    bool strict = true;
    std::string out_file;
};

class Runner {
public:
    Runner(std::ostream& out, Globals& g) : out_(out), g_(g) {}

    DeciderConfig config() const {
        DeciderConfig cfg;
        cfg.eps = g_.eps;
        cfg.n_small = g_.n_small;
        cfg.strict = g_.strict;
        cfg.opt.seed = g_.seed;
        return cfg;
    }

    Hypergraph load(const std::string& name, const std::string& path) {
        auto h = read_hypergraph_file(path);
        manifest_.inputs.emplace_back(name, hex_digest(digest(h)));
        return h;
    }

    Pattern load_pattern(const std::string& name, const std::string& path) {
        auto p = read_pattern_file(path);
        manifest_.inputs.emplace_back(name, hex_digest(text_digest(serialize(p))));
        return p;
    }

    void begin(std::string command, json params) {
        manifest_.command = std::move(command);
        manifest_.parameters = std::move(params);
        manifest_.seed = g_.seed;
        manifest_.parameters["eps"] = g_.eps;
        manifest_.parameters["strict"] = g_.strict;
        if (g_.n_small) manifest_.parameters["n_small"] = *g_.n_small;
        start_ = std::chrono::steady_clock::now();
    }

    int emit(const Decision& d) {
        stamp();
        if (g_.format == "text") {
            out_ << decision_text(d);
        } else {
            out_ << report_json(manifest_, d).dump(2) << "\n";
        }
        return verdict_code(d.verdict);
    }

    int emit(const json& result, const std::string& text, int code = kExitYes) {
        stamp();
        if (g_.format == "text") {
            out_ << text;
        } else {
            out_ << report_json(manifest_, result).dump(2) << "\n";
        }
        return code;
    }

    int write_graph(const Hypergraph& h) {
        auto text = serialize(h);
        if (g_.out_file.empty()) {
            out_ << text;
        } else {
            std::ofstream f(g_.out_file);
            if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + g_.out_file);
            f << text;
        }
        return kExitYes;
    }

private:
    void stamp() {
        manifest_.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    std::ostream& out_;
    Globals& g_;
    RunManifest manifest_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<std::size_t> parse_sizes(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != tok.size()) throw Error(ErrorKind::InvalidInput, "bad size list '" + s + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) throw Error(ErrorKind::InvalidInput, "empty size list");
    return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Degree-threshold deciders for dense uniform hypergraphs", "degstab"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    std::size_t n_small = 0;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", g.seed, "Seed for every random choice");
    app.add_option("--eps", g.eps, "Accepted slack below the degree threshold")->check(CLI::NonNegativeNumber);
    auto* nsmall_opt = app.add_option("--n-small", n_small, "Order below which the oracle is used");
    app.add_flag("--strict,!--no-strict", g.strict, "Reject sub-threshold inputs instead of calling the oracle");
    app.add_option("--out", g.out_file, "Output file for generators");

    std::function<int()> action;
    Runner run(out, g);

    // decide
    auto* decide = app.add_subcommand("decide", "Run a decider on a hypergraph file");
    decide->require_subcommand(1);
    std::string input, pattern_file, f_file;
    int ell = 0;
    std::uint64_t k = 0;

    auto* kcolor = decide->add_subcommand("kcolor", "K_l-colorability above the minimum-degree threshold");
    kcolor->add_option("--l", ell, "Number of colors")->required();
    kcolor->add_option("input", input, "Graph file, - for stdin")->required();
    kcolor->callback([&] {
        action = [&] {
            auto h = run.load("input", input);
            run.begin("decide kcolor", {{"l", ell}});
            return run.emit(decide_k_colorable(h, ell, run.config()));
        };
    });

    auto* kfree = decide->add_subcommand("kfree", "F-freeness for a Turan pair (F, P)");
    kfree->add_option("--l", ell, "Use F = K_{l+1}, P = K_l");
    kfree->add_option("--F", f_file, "Forbidden hypergraph file");
    kfree->add_option("--pattern", pattern_file, "Pattern file");
    kfree->add_option("input", input, "Host file, - for stdin")->required();
    kfree->callback([&] {
        action = [&] {
            auto h = run.load("input", input);
            Hypergraph f;
            Pattern p;
            if (ell > 0) {
                f = complete_pattern(ell + 1).to_hypergraph();
                p = complete_pattern(ell);
            } else {
                if (f_file.empty() || pattern_file.empty()) {
                    throw CLI::ValidationError("decide kfree", "give --l, or both --F and --pattern");
                }
                f = run.load("F", f_file);
                p = run.load_pattern("pattern", pattern_file);
            }
            run.begin("decide kfree", {{"l", ell}});
            return run.emit(embed_min_decide(h, f, p, run.config()));
        };
    });

    for (const char* which : {"hom", "shom"}) {
        const bool surj = std::string(which) == "shom";
        auto* sub = decide->add_subcommand(which, surj ? "Surjective P-colorability for a rigid pattern"
                                                       : "P-colorability for a minimal pattern");
        sub->add_option("--pattern", pattern_file, "Pattern file")->required();
        sub->add_option("input", input, "Host file, - for stdin")->required();
        sub->callback([&, surj] {
            action = [&, surj] {
                auto h = run.load("input", input);
                auto p = run.load_pattern("pattern", pattern_file);
                run.begin(surj ? "decide shom" : "decide hom", json::object());
                auto cfg = run.config();
                return run.emit(surj ? decide_shom_rigid(h, p, cfg) : decide_hom_minimal(h, p, cfg));
            };
        });
    }

    auto* avg = decide->add_subcommand("avg", "K_{l+1}-freeness with at least ex(n, K_{l+1}) - k edges");
    avg->add_option("--l", ell, "Clique parameter")->required();
    avg->add_option("--k", k, "Edge deficit")->required();
    avg->add_option("input", input, "Graph file, - for stdin")->required();
    avg->callback([&] {
        action = [&] {
            auto h = run.load("input", input);
            run.begin("decide avg", {{"l", ell}, {"k", k}});
            return run.emit(clique_avg_decide(h, ell, k, run.config()));
        };
    });

    // cluster
    std::string delta_text;
    auto* cluster = app.add_subcommand("cluster", "Hamming clustering");
    cluster->add_option("--l", ell, "Number of classes")->required();
    cluster->add_option("--delta", delta_text, "Radius factor, p/q or decimal")->required();
    cluster->add_option("input", input, "Hypergraph file, - for stdin")->required();
    cluster->callback([&] {
        action = [&] {
            auto h = run.load("input", input);
            run.begin("cluster", {{"l", ell}, {"delta", delta_text}});
            ClusterResult res;
            if (auto slash = delta_text.find('/'); slash != std::string::npos) {
                res = hamming_clustering(h, ell,
                                         Rational(std::stoll(delta_text.substr(0, slash)), std::stoll(delta_text.substr(slash + 1))));
            } else {
                res = hamming_clustering(h, ell, std::stod(delta_text));
            }
            json classes = json::array();
            std::string text;
            for (const auto& c : res.partition.classes()) {
                classes.push_back(c);
                text += "{";
                for (std::size_t i = 0; i < c.size(); ++i) text += (i ? " " : "") + std::to_string(c[i]);
                text += "}\n";
            }
            json result = {{"classes", classes},
                           {"seeds", res.seeds},
                           {"radius", res.radius},
                           {"distance_evaluations", res.distance_evaluations}};
            return run.emit(result, text);
        };
    });

    // numerical layer
    int restarts = 64;
    bool no_closed = false;
    for (const char* which : {"lagrangian", "phi", "rigidity"}) {
        auto* sub = app.add_subcommand(which, std::string("Pattern ") + which);
        sub->add_option("pattern", pattern_file, "Pattern file, - for stdin")->required();
        sub->add_option("--restarts", restarts, "Optimizer restarts");
        sub->add_flag("--no-closed-forms", no_closed, "Use the optimizer even for complete patterns");
        const std::string name = which;
        sub->callback([&, name] {
            action = [&, name] {
                auto p = run.load_pattern("pattern", pattern_file);
                run.begin(name, {{"restarts", restarts}, {"closed_forms", !no_closed}});
                OptConfig cfg;
                cfg.restarts = restarts;
                cfg.closed_forms = !no_closed;
                cfg.seed = g.seed;
                std::ostringstream text;
                text.precision(12);
                if (name == "rigidity") {
                    auto rep = rigidity_report(p, cfg);
                    auto mini = is_minimal(p, cfg);
                    json w = json::array();
                    for (const auto& x : rep.witnesses) w.push_back(point_json(x));
                    json result = {{"Phi", rep.Phi},
                                   {"phi", rep.phi},
                                   {"rigid", rep.rigid},
                                   {"minimal", mini.minimal},
                                   {"minimality_margin", mini.margin},
                                   {"twins", has_twins(p)},
                                   {"numerical", rep.numerical},
                                   {"witnesses", w},
                                   {"reason", rep.reason}};
                    if (rep.violating_witness) result["violating_witness"] = point_json(*rep.violating_witness);
                    text << "Phi: " << rep.Phi << "\nphi: " << rep.phi << "\nrigid: " << (rep.rigid ? "yes" : "no")
                         << "\nminimal: " << (mini.minimal ? "yes" : "no") << "\nreason: " << rep.reason << "\n";
                    if (rep.numerical) text << "note: numerical classification, not a proof\n";
                    return run.emit(result, text.str());
                }
                auto rep = name == "phi" ? phi(p, cfg) : lagrangian(p, cfg);
                text << name << ": " << rep.value << "\nargmax: " << point_text(rep.argmax) << "\n";
                if (rep.exact) text << "exact: " << rep.exact->str() << "\n";
                return run.emit(opt_json(rep), text.str());
            };
        });
    }

    // generators
    auto* gen = app.add_subcommand("gen", "Instance generators (hypergraph text on stdout)");
    gen->require_subcommand(1);
    std::size_t n = 0, q = 1, part_size = 1, del = 0;
    std::string sizes_text, catalog_name, base_file;
    int cat_k = 3, cat_t = 2, cat_r = 3;
    bool plant = false;

    auto* g_turan = gen->add_subcommand("turan", "Balanced complete l-partite graph");
    g_turan->add_option("--n", n, "Vertices")->required();
    g_turan->add_option("--l", ell, "Parts")->required();
    g_turan->callback([&] { action = [&] { return run.write_graph(turan_graph(n, ell)); }; });

    auto* g_blowup = gen->add_subcommand("blowup", "Blow-up of a pattern");
    g_blowup->add_option("--pattern", pattern_file, "Pattern file")->required();
    g_blowup->add_option("--sizes", sizes_text, "Class sizes, comma separated")->required();
    g_blowup->callback([&] {
        action = [&] { return run.write_graph(pattern_blowup(read_pattern_file(pattern_file), parse_sizes(sizes_text))); };
    });

    auto* g_join = gen->add_subcommand("join", "Join with q independent sets");
    g_join->add_option("--q", q, "Number of added parts")->required();
    g_join->add_option("--part-size", part_size, "Size of each added part")->required();
    g_join->add_option("input", input, "Graph file, - for stdin")->required();
    g_join->callback([&] {
        action = [&] { return run.write_graph(join_construction(read_hypergraph_file(input), q, part_size)); };
    });

    auto* g_cat = gen->add_subcommand("catalog", "Named fixture");
    g_cat->add_option("name", catalog_name, "Fixture name")->required()->check(CLI::IsMember(catalog_names()));
    g_cat->add_option("--k", cat_k, "Size parameter");
    g_cat->add_option("--t", cat_t, "Blow-up factor");
    g_cat->add_option("--r", cat_r, "Uniformity");
    g_cat->add_option("--base", base_file, "Base graph for expansion");
    g_cat->callback([&] {
        action = [&] {
            CatalogParams prm{cat_k, cat_t, cat_r, std::nullopt};
            if (!base_file.empty()) prm.base = read_hypergraph_file(base_file);
            return run.write_graph(catalog(catalog_name, prm));
        };
    });

    auto* g_perturb = gen->add_subcommand("perturb", "Delete random edges and/or plant an internal edge");
    g_perturb->add_option("input", input, "Hypergraph file, - for stdin")->required();
    g_perturb->add_option("--delete", del, "Edges to delete");
    g_perturb->add_flag("--plant", plant, "Add one edge inside a class");
    g_perturb->add_option("--l", ell, "Classes are the balanced consecutive l-partition");
    g_perturb->add_option("--sizes", sizes_text, "Classes are consecutive blocks of these sizes");
    g_perturb->callback([&] {
        action = [&] {
            auto h = read_hypergraph_file(input);
            if (del > 0) h = delete_random_edges(h, del, g.seed);
            if (plant) {
                Partition parts;
                if (!sizes_text.empty()) {
                    parts = block_partition(parse_sizes(sizes_text));
                } else if (ell > 0) {
                    parts = turan_parts(h.order(), ell);
                } else {
                    throw CLI::ValidationError("gen perturb", "--plant needs --l or --sizes");
                }
                h = plant_violation(h, parts, g.seed ^ 0x5bd1e995ULL);
            }
            return run.write_graph(h);
        };
    });

    // oracles
    auto* oracle = app.add_subcommand("oracle", "Brute-force reference searches");
    oracle->require_subcommand(1);
    bool surjective = false;
    auto* o_embed = oracle->add_subcommand("embed", "Search for a copy of F");
    o_embed->add_option("--F", f_file, "Forbidden hypergraph file")->required();
    o_embed->add_option("input", input, "Host file, - for stdin")->required();
    o_embed->callback([&] {
        action = [&] {
            auto h = run.load("input", input);
            auto f = run.load("F", f_file);
            run.begin("oracle embed", json::object());
            auto emb = find_embedding(f, h);
            json result = {{"found", emb.has_value()}};
            std::string text = emb ? "embedding:" : "no embedding\n";
            if (emb) {
                result["map"] = *emb;
                for (auto v : *emb) text += " " + std::to_string(v);
                text += "\n";
            }
            return run.emit(result, text, emb ? kExitYes : kExitNo);
        };
    });
    auto* o_hom = oracle->add_subcommand("hom", "Search for a homomorphism to a pattern");
    o_hom->add_option("--pattern", pattern_file, "Pattern file")->required();
    o_hom->add_flag("--surjective", surjective, "Require every pattern vertex to be hit");
    o_hom->add_option("input", input, "Host file, - for stdin")->required();
    o_hom->callback([&] {
        action = [&] {
            auto h = run.load("input", input);
            auto p = run.load_pattern("pattern", pattern_file);
            run.begin("oracle hom", {{"surjective", surjective}});
            auto map = find_homomorphism(h, p, surjective);
            json result = {{"found", map.has_value()}};
            std::string text = map ? "homomorphism:" : "no homomorphism\n";
            if (map) {
                // 1-based pattern labels, as in the pattern format.
                std::vector<int> labels = *map;
                for (auto& x : labels) ++x;
                result["map"] = labels;
                for (auto v : labels) text += " " + std::to_string(v);
                text += "\n";
            }
            return run.emit(result, text, map ? kExitYes : kExitNo);
        };
    });

    // bench
    std::string scenario = "kcolor";
    std::string bench_sizes = "1000,2000,4000";
    double min_seconds = 0.2;
    auto* benchc = app.add_subcommand("bench", "Time a decider over growing n");
    benchc->add_option("--scenario", scenario, "kcolor, hom, shom or avg")
        ->check(CLI::IsMember({"kcolor", "hom", "shom", "avg"}));
    benchc->add_option("--sizes", bench_sizes, "Comma-separated n values");
    benchc->add_option("--min-seconds", min_seconds, "Minimum timed span per row");
    benchc->callback([&] {
        action = [&] {
            auto sizes = parse_sizes(bench_sizes);
            run.begin("bench", {{"scenario", scenario}, {"sizes", sizes}});
            BenchOptions opts;
            opts.min_seconds = min_seconds;
            auto rows = bench(scenario, sizes, g.seed, opts);
            json arr = json::array();
            std::ostringstream text;
            text << "n,seconds,repetitions,distance_evaluations,distance_work,work,verdict,within_bound\n";
            bool ok = true;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto& r = rows[i];
                ok = ok && r.within_bound;
                json row = {{"n", r.n},
                            {"seconds", r.seconds},
                            {"repetitions", r.repetitions},
                            {"distance_evaluations", r.distance_evaluations},
                            {"distance_work", r.distance_work},
                            {"work", r.work},
                            {"verdict", to_string(r.verdict)},
                            {"within_bound", r.within_bound}};
                if (i > 0 && rows[i - 1].seconds > 0) row["time_ratio"] = r.seconds / rows[i - 1].seconds;
                arr.push_back(row);
                text << r.n << "," << r.seconds << "," << r.repetitions << "," << r.distance_evaluations << ","
                     << r.distance_work << "," << r.work << "," << to_string(r.verdict) << ","
                     << (r.within_bound ? "true" : "false") << "\n";
            }
            return run.emit(json{{"rows", arr}}, text.str(), ok ? kExitYes : kExitNo);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }
    if (nsmall_opt->count() > 0) g.n_small = n_small;

    try {
        return action ? action() : kExitUsage;
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "parse error (" << to_string(e.kind()) << ") " << e.what() << "\n";
        return kExitParse;
    } catch (const NumericFailure& e) {
        err << "numeric failure: " << e.what() << " (best value " << e.best_value() << ")\n";
        return kExitNumeric;
    } catch (const Error& e) {
        err << to_string(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == ErrorKind::OracleTimeout ? kExitTimeout : kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int run_cli(int argc, const char* const* argv) { return run_cli(argc, argv, std::cout, std::cerr); }

}  // namespace degstab
