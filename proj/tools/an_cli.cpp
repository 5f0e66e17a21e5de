// an: generate alternating group networks, compute component connectivity
// exactly, build the constructive cuts, and machine-check the structural
// facts at desk scale.
//
// Exit codes: 0 success / claims verified, 1 claim violation found, 2 usage
// or input error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "an/an_network.hpp"
#include "an/connectivity.hpp"
#include "an/dot_export.hpp"
#include "an/edge_list.hpp"
#include "an/graph_algorithms.hpp"
#include "an/json_export.hpp"
#include "an/lemma_audits.hpp"
#include "an/proof_cuts.hpp"
#include "an/runtime.hpp"

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

namespace {

struct Ledger {
    ordered_json doc;
    std::string path;
    bool zero_timings = false;

    void init(const std::string& command, ordered_json config) {
        doc["tool"] = "an";
        doc["version"] = std::string(an::kToolVersion);
        doc["command"] = command;
        doc["config"] = std::move(config);
        doc["results"] = ordered_json::array();
    }

    void add(ordered_json result) { doc["results"].push_back(std::move(result)); }

    static void scrub(ordered_json& node) {
        if (node.is_object()) {
            for (auto& [key, value] : node.items()) {
                if (key == "elapsed_ms" && value.is_number())
                    value = 0;
                else
                    scrub(value);
            }
        } else if (node.is_array()) {
            for (auto& item : node) scrub(item);
        }
    }

    void write(std::int64_t elapsed_ms) {
        if (path.empty()) return;
        doc["elapsed_ms"] = elapsed_ms;
        if (zero_timings) scrub(doc);
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write ledger: " + path);
        out << doc.dump(2) << '\n';
    }
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    long double r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / i;
    return r > 1e18L ? static_cast<std::uint64_t>(2e18L) : static_cast<std::uint64_t>(r + 0.5L);
}

std::uint64_t subset_scan_cost(std::size_t vertices, int k_max) {
    std::uint64_t total = 0;
    for (int k = 1; k <= k_max; ++k) {
        total += binomial(vertices, static_cast<std::uint64_t>(k));
        if (total > static_cast<std::uint64_t>(2e18)) break;
    }
    return total;
}

constexpr std::uint64_t kLongRunningThreshold = 100'000'000;

void print_certificate(const an::CutCertificate& cert, const an::AnNetwork* net) {
    std::printf("  faulty set (%zu):", cert.faulty.count());
    cert.faulty.for_each([&](an::VertexId v) {
        if (net)
            std::printf(" %u(%s)", v, net->label_string(v).c_str());
        else
            std::printf(" %u", v);
    });
    std::printf("\n  components: %zu |", cert.components.size());
    for (std::size_t i = 0; i < cert.components.size(); ++i)
        std::printf(" %zu[%s]", cert.components[i].count(),
                    std::string(an::shape_name(cert.shapes[i])).c_str());
    std::printf("\n  satisfied: %s\n", cert.satisfied ? "yes" : "no");
}

int default_kmax(int n, int ell) {
    switch (ell) {
        case 2: return n - 1;
        case 3: return 2 * n - 2;
        case 4: return 3 * n - 5;  // one past the theorem value proves minimality
        default: return (ell - 1) * (n - 1);
    }
}

an::AnNetwork build_network(int n, int cap) {
    an::AnBuildOptions opts;
    if (cap > 0) opts.dimension_cap = cap;
    return an::build_an(n, opts);
}

// ---- gen -------------------------------------------------------------------

int cmd_gen(int n, int cap, bool stats, const std::string& dot_path,
            const std::string& edges_path) {
    const an::AnNetwork net = build_network(n, cap);
    const auto& g = net.graph();
    std::printf("alternating group network, dimension %d\n", n);
    std::printf("  vertices: %zu\n  edges: %zu\n", g.vertex_count(), g.edge_count());
    if (stats) {
        std::printf("  regular: %d\n", g.degree(0));
        if (g.vertex_count() <= an::TopologyGraph::kDefaultBitRowThreshold) {
            std::printf("  diameter: %d\n", an::all_pairs_diameter(g));
        } else {
            // vertex-transitive, so one eccentricity suffices
            std::printf("  diameter: %d (single-source eccentricity; the network is vertex-transitive)\n",
                        an::eccentricity(g, 0));
        }
        const an::SubnetPartition part = subnet_partition(net);
        std::printf("  classes: %d of %zu vertices, %llu external edges per pair\n", n,
                    part.classes[0].count(),
                    static_cast<unsigned long long>(an::even_permutation_count(n - 2)));
    }
    if (!dot_path.empty()) {
        std::vector<std::string> labels;
        labels.reserve(g.vertex_count());
        for (an::VertexId v = 0; v < g.vertex_count(); ++v) labels.push_back(net.label_string(v));
        std::ofstream out(dot_path);
        if (!out) throw std::runtime_error("cannot write: " + dot_path);
        out << an::export_dot(g, &labels, "an" + std::to_string(n));
        std::printf("  dot written to %s\n", dot_path.c_str());
    }
    if (!edges_path.empty()) {
        an::write_edge_list_file(edges_path, g);
        std::printf("  edge list written to %s\n", edges_path.c_str());
    }
    return 0;
}

// ---- kappa -----------------------------------------------------------------

int run_engines(const an::TopologyGraph& g, const an::AnNetwork* net, std::optional<int> dim,
                const std::string& engine, int ell, int k_max, int workers, bool long_running,
                Ledger& ledger) {
    an::SolveOptions opts;
    opts.workers = workers;

    const bool want_exhaustive = engine == "exhaustive" || engine == "both";
    const bool want_fragment = engine == "fragment" || engine == "both";

    if (want_exhaustive) {
        const std::uint64_t cost = subset_scan_cost(g.vertex_count(), k_max);
        if (cost > kLongRunningThreshold) {
            std::printf("exhaustive scan needs about %.3g subset tests up to k=%d\n",
                        static_cast<double>(cost), k_max);
            if (!long_running) {
                std::fprintf(stderr,
                             "refusing without --long-running (expect hours of runtime)\n");
                return 2;
            }
        }
    }

    std::optional<an::KappaResult> exhaustive, fragment;
    if (want_exhaustive) {
        exhaustive = an::kappa_ell_exhaustive(g, ell, k_max, opts);
        if (exhaustive) {
            std::printf("exhaustive: value %d (nodes %llu, %lld ms)\n", exhaustive->value,
                        static_cast<unsigned long long>(exhaustive->nodes_explored),
                        static_cast<long long>(exhaustive->elapsed.count()));
            print_certificate(exhaustive->witness, net);
        } else {
            std::printf("exhaustive: no faulty set of size <= %d satisfies the condition\n", k_max);
        }
        ledger.add(exhaustive ? an::kappa_result_json(*exhaustive, dim, net)
                              : ordered_json{{"value", nullptr}, {"method", "exhaustive"}});
    }
    if (want_fragment) {
        fragment = an::kappa_ell_fragment_search(g, ell, k_max, opts);
        if (fragment) {
            std::printf("fragment: value %d (nodes %llu, %lld ms)\n", fragment->value,
                        static_cast<unsigned long long>(fragment->nodes_explored),
                        static_cast<long long>(fragment->elapsed.count()));
            print_certificate(fragment->witness, net);
        } else {
            std::printf("fragment: no faulty set of size <= %d satisfies the condition\n", k_max);
        }
        ledger.add(fragment ? an::kappa_result_json(*fragment, dim, net)
                            : ordered_json{{"value", nullptr}, {"method", "fragment"}});
    }

    if (engine == "both") {
        const bool agree = exhaustive.has_value() == fragment.has_value() &&
                           (!exhaustive || exhaustive->value == fragment->value);
        if (!agree) {
            std::fprintf(stderr, "ENGINE DISAGREEMENT: exhaustive vs fragment\n");
            return 1;
        }
        std::printf("engines agree\n");
    }
    return 0;
}

int cmd_kappa(int n, int cap, int ell, const std::string& engine, int k_max_opt, int workers,
              bool long_running, Ledger& ledger) {
    const an::AnNetwork net = build_network(n, cap);
    const int k_max = k_max_opt > 0 ? k_max_opt : default_kmax(n, ell);
    std::printf("component connectivity of dimension %d, ell=%d, k_max=%d\n", n, ell, k_max);
    return run_engines(net.graph(), &net, n, engine, ell, k_max, workers, long_running, ledger);
}

// ---- cut -------------------------------------------------------------------

int cmd_cut(int n, int cap, const std::string& kind, const std::string& at, Ledger& ledger) {
    const an::AnNetwork net = build_network(n, cap);
    const auto& g = net.graph();
    an::VertexSet faulty(g.vertex_count());
    int ell = 2;
    if (kind == "vertex") {
        an::VertexId v = 0;
        if (!at.empty()) v = static_cast<an::VertexId>(std::stoul(at));
        faulty = an::cut_vertex_neighborhood(net, v);
        std::printf("neighborhood cut of vertex %u (%s)\n", v, net.label_string(v).c_str());
    } else if (kind == "edge") {
        an::VertexId u = 0, v = 0;
        if (at.empty()) {
            u = 0;
            v = g.neighbors(0)[0];
        } else {
            const auto comma = at.find(',');
            if (comma == std::string::npos)
                throw CLI::ValidationError("--at", "edge cuts need --at U,V");
            u = static_cast<an::VertexId>(std::stoul(at.substr(0, comma)));
            v = static_cast<an::VertexId>(std::stoul(at.substr(comma + 1)));
        }
        faulty = an::cut_edge_neighborhood(net, u, v);
        std::printf("neighborhood cut of edge (%u,%u) = (%s,%s)\n", u, v,
                    net.label_string(u).c_str(), net.label_string(v).c_str());
    } else {  // six-cycle
        const an::SixCycleCut cut = an::cut_six_cycle(net);
        faulty = cut.faulty;
        ell = 4;
        std::printf("six-cycle cut; cycle:");
        for (an::VertexId v : cut.cycle) std::printf(" %u(%s)", v, net.label_string(v).c_str());
        std::printf("\n");
    }
    const an::CutCertificate cert = an::verify_cut(g, faulty, ell);
    print_certificate(cert, &net);
    ledger.add(an::certificate_json(cert, n, &net));
    return cert.satisfied ? 0 : 1;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(int n, int cap, const std::string& suite, const std::string& lemma, int workers,
               bool long_running, Ledger& ledger) {
    const an::AnNetwork net = build_network(n, cap);
    an::AuditOptions opts;
    opts.workers = workers;

    const bool all = lemma == "all";
    std::vector<an::LemmaReport> reports;
    std::vector<std::string> skipped;

    if ((all || lemma == "basic")) {
        if (n >= 4)
            reports.push_back(an::verify_basic_lemma(net, opts));
        else
            skipped.push_back("basic (needs n >= 4)");
    }
    if ((all || lemma == "subgraph")) {
        if (n >= 6)
            reports.push_back(an::verify_subgraph_neighborhood_bounds(net, opts));
        else
            skipped.push_back("subgraph (needs n >= 6)");
    }
    if ((all || lemma == "small-cuts")) {
        if (n <= 5) {
            int extended_cap = 0;
            if (n >= 5) {
                extended_cap = suite == "full" ? 3 * n - 7 : std::min(6, 3 * n - 7);
                const std::uint64_t cost =
                    subset_scan_cost(net.graph().vertex_count(), extended_cap);
                if (cost > kLongRunningThreshold) {
                    std::printf("small-cut scan up to k=%d needs about %.3g subset tests\n",
                                extended_cap, static_cast<double>(cost));
                    if (!long_running) {
                        std::fprintf(stderr, "refusing without --long-running\n");
                        return 2;
                    }
                }
            }
            for (auto& rep : an::verify_small_cuts_all(net, extended_cap, opts))
                reports.push_back(std::move(rep));
        } else {
            skipped.push_back("small-cuts (exhaustive subset scan infeasible for n >= 6)");
        }
    }
    if ((all || lemma == "super")) {
        if (n >= 4)
            reports.push_back(an::verify_super_connectivity(net, opts));
        else
            skipped.push_back("super (needs n >= 4)");
    }

    bool all_passed = true;
    for (const auto& rep : reports) {
        std::printf("[%s] %-32s n=%d checked=%llu violations=%zu\n", rep.passed ? "PASS" : "FAIL",
                    rep.lemma_id.c_str(), rep.n, static_cast<unsigned long long>(rep.instances_checked),
                    rep.violations.size());
        for (const auto& note : rep.notes)
            std::printf("       note: %s: %s\n", note.first.c_str(), note.second.c_str());
        std::size_t shown = 0;
        for (const auto& v : rep.violations) {
            std::printf("       violation: %s; observed %s, expected %s\n", v.what.c_str(),
                        v.observed.c_str(), v.expected.c_str());
            if (++shown == 5 && rep.violations.size() > 5) {
                std::printf("       ... %zu more\n", rep.violations.size() - shown);
                break;
            }
        }
        all_passed = all_passed && rep.passed;
        ledger.add(an::lemma_report_json(rep));
    }
    for (const auto& s : skipped) std::printf("[skip] %s\n", s.c_str());
    std::printf("verification: %zu report(s), %s\n", reports.size(),
                all_passed ? "all passed" : "violations found");
    return all_passed ? 0 : 1;
}

// ---- solve -----------------------------------------------------------------

int cmd_solve(const std::string& edges_path, int ell, int k_max_opt, const std::string& engine,
              int workers, bool long_running, Ledger& ledger) {
    const an::TopologyGraph g = an::load_edge_list_file(edges_path);
    std::printf("graph: %zu vertices, %zu edges\n", g.vertex_count(), g.edge_count());
    const int k_max = k_max_opt > 0 ? k_max_opt : static_cast<int>(g.vertex_count());
    return run_engines(g, nullptr, std::nullopt, engine, ell, k_max, workers, long_running,
                       ledger);
}

// ---- export ----------------------------------------------------------------

int cmd_export(int n, int cap, const std::string& format, const std::string& out_path) {
    const an::AnNetwork net = build_network(n, cap);
    const auto& g = net.graph();
    std::ostringstream buf;
    if (format == "dot") {
        std::vector<std::string> labels;
        labels.reserve(g.vertex_count());
        for (an::VertexId v = 0; v < g.vertex_count(); ++v) labels.push_back(net.label_string(v));
        buf << an::export_dot(g, &labels, "an" + std::to_string(n));
    } else if (format == "edges") {
        an::write_edge_list(buf, g);
    } else {
        buf << an::graph_json(g, n, &net).dump(2) << '\n';
    }
    if (out_path.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write: " + out_path);
        out << buf.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alternating group network toolkit: exact component connectivity, "
                 "constructive cuts, structural audits"};
    app.require_subcommand(1);
    app.get_formatter()->column_width(36);

    std::string json_path;
    bool zero_timings = false;
    int workers_opt = 0;
    int cap = 0;
    app.add_option("--json", json_path, "write a JSON run ledger to this path")->capture_default_str();
    app.add_flag("--zero-timings", zero_timings, "zero elapsed_ms fields in the ledger");
    app.add_option("--workers", workers_opt, "worker threads (default: AN_WORKERS or hardware)");
    app.add_option("--cap", cap, "dimension cap override (hard limit 12)");

    // ledger/worker flags may be given before or after the subcommand
    app.fallthrough();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a network");
    gen->fallthrough();
    int gen_n = 0;
    bool gen_stats = false;
    std::string gen_dot, gen_edges;
    gen->add_option("n", gen_n, "dimension (>= 3)")->required();
    gen->add_flag("--stats", gen_stats, "print regularity, diameter, class structure");
    gen->add_option("--export-dot", gen_dot, "write DOT to this path");
    gen->add_option("--export-edges", gen_edges, "write an edge list to this path");

    // kappa
    auto* kappa = app.add_subcommand("kappa", "exact l-component connectivity");
    kappa->fallthrough();
    int kappa_n = 0, kappa_ell = 0, kappa_kmax = 0;
    std::string kappa_engine = "fragment";
    bool kappa_long = false;
    kappa->add_option("n", kappa_n, "dimension (>= 3)")->required();
    kappa->add_option("--ell", kappa_ell, "number of components (>= 2)")->required();
    kappa->add_option("--engine", kappa_engine, "exhaustive|fragment|both")
        ->check(CLI::IsMember({"exhaustive", "fragment", "both"}));
    kappa->add_option("--kmax", kappa_kmax, "largest faulty-set size to search");
    kappa->add_flag("--long-running", kappa_long, "allow searches estimated beyond minutes");

    // cut
    auto* cut = app.add_subcommand("cut", "constructive cuts with certificates");
    cut->fallthrough();
    int cut_n = 0;
    std::string cut_kind, cut_at;
    cut->add_option("n", cut_n, "dimension (>= 3)")->required();
    cut->add_option("--kind", cut_kind, "vertex|edge|six-cycle")
        ->required()
        ->check(CLI::IsMember({"vertex", "edge", "six-cycle"}));
    cut->add_option("--at", cut_at, "vertex id, or U,V for an edge");

    // verify
    auto* verify = app.add_subcommand("verify", "run the structural audit suites");
    verify->fallthrough();
    int verify_n = 0;
    std::string verify_suite = "default", verify_lemma = "all";
    bool verify_long = false;
    verify->add_option("n", verify_n, "dimension (>= 3)")->required();
    verify->add_option("--suite", verify_suite, "default|full")
        ->check(CLI::IsMember({"default", "full"}));
    verify->add_option("--lemma", verify_lemma, "basic|subgraph|small-cuts|super|all")
        ->check(CLI::IsMember({"basic", "subgraph", "small-cuts", "super", "all"}));
    verify->add_flag("--long-running", verify_long, "allow audits estimated beyond minutes");

    // solve
    auto* solve = app.add_subcommand("solve", "connectivity of an arbitrary edge-list graph");
    solve->fallthrough();
    std::string solve_edges, solve_engine = "both";
    int solve_ell = 0, solve_kmax = 0;
    bool solve_long = false;
    solve->add_option("--edges", solve_edges, "edge list file")->required();
    solve->add_option("--ell", solve_ell, "number of components (>= 2)")->required();
    solve->add_option("--kmax", solve_kmax, "largest faulty-set size to search");
    solve->add_option("--engine", solve_engine, "exhaustive|fragment|both")
        ->check(CLI::IsMember({"exhaustive", "fragment", "both"}));
    solve->add_flag("--long-running", solve_long, "allow searches estimated beyond minutes");

    // export
    auto* exp = app.add_subcommand("export", "print a network in dot, edges, or json form");
    exp->fallthrough();
    int export_n = 0;
    std::string export_format, export_out;
    exp->add_option("n", export_n, "dimension (>= 3)")->required();
    exp->add_option("--format", export_format, "dot|edges|json")
        ->required()
        ->check(CLI::IsMember({"dot", "edges", "json"}));
    exp->add_option("--out", export_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const int workers = an::resolve_workers(workers_opt);

    std::ostringstream cmdline;
    for (int i = 0; i < argc; ++i) cmdline << (i ? " " : "") << argv[i];

    Ledger ledger;
    ledger.path = json_path;
    ledger.zero_timings = zero_timings;

    const auto started = Clock::now();
    int rc = 0;
    try {
        if (gen->parsed()) {
            ledger.init(cmdline.str(), {{"n", gen_n}, {"cap", cap}, {"workers", workers}});
            rc = cmd_gen(gen_n, cap, gen_stats, gen_dot, gen_edges);
        } else if (kappa->parsed()) {
            const int km = kappa_kmax > 0 ? kappa_kmax : default_kmax(kappa_n, kappa_ell);
            ledger.init(cmdline.str(),
                        {{"n", kappa_n},
                         {"ell", kappa_ell},
                         {"engine", kappa_engine},
                         {"kmax", km},
                         {"cap", cap},
                         {"workers", workers},
                         {"long_running", kappa_long}});
            rc = cmd_kappa(kappa_n, cap, kappa_ell, kappa_engine, kappa_kmax, workers, kappa_long,
                           ledger);
        } else if (cut->parsed()) {
            ledger.init(cmdline.str(), {{"n", cut_n},
                                        {"kind", cut_kind},
                                        {"at", cut_at},
                                        {"cap", cap},
                                        {"workers", workers}});
            rc = cmd_cut(cut_n, cap, cut_kind, cut_at, ledger);
        } else if (verify->parsed()) {
            ledger.init(cmdline.str(), {{"n", verify_n},
                                        {"suite", verify_suite},
                                        {"lemma", verify_lemma},
                                        {"cap", cap},
                                        {"workers", workers},
                                        {"long_running", verify_long},
                                        {"sample_seed", an::AuditOptions{}.sample_seed}});
            rc = cmd_verify(verify_n, cap, verify_suite, verify_lemma, workers, verify_long,
                            ledger);
        } else if (solve->parsed()) {
            ledger.init(cmdline.str(), {{"edges", solve_edges},
                                        {"ell", solve_ell},
                                        {"engine", solve_engine},
                                        {"kmax", solve_kmax},
                                        {"workers", workers},
                                        {"long_running", solve_long}});
            rc = cmd_solve(solve_edges, solve_ell, solve_kmax, solve_engine, workers, solve_long,
                           ledger);
        } else if (exp->parsed()) {
            ledger.init(cmdline.str(),
                        {{"n", export_n}, {"format", export_format}, {"cap", cap}});
            rc = cmd_export(export_n, cap, export_format, export_out);
        }
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started);
        ledger.write(elapsed.count());
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return rc;
}
