#include "spansub/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "spansub/builder.hpp"
#include "spansub/constructions.hpp"
#include "spansub/graph.hpp"
#include "spansub/hunt.hpp"
#include "spansub/io.hpp"
#include "spansub/oracle.hpp"
#include "spansub/parallel.hpp"
#include "spansub/rgg.hpp"

namespace spansub {

namespace {

// Derived, documented stream split so the adversary never replays the
// sample's own randomness.
constexpr std::uint64_t kAdversaryStreamSalt = 0x9e3779b97f4a7c15ULL;

struct GlobalOptions {
    std::uint64_t seed = 0;
    int jobs = 1;
    int oracle_cap = kDefaultHamiltonCap;
    bool no_witness_check = false;
};

LabeledGraph load_graph(const std::string& path, bool check_witness,
                        int* witness_out) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path + ": cannot open file");
    }
    EdgeListFile file = read_edge_list(in, path);
    if (witness_out) *witness_out = file.k;
    return edge_list_to_graph(file, check_witness);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error(path + ": cannot open file for writing");
    }
    return out;
}

ConditionId parse_condition(const std::string& name) {
    auto id = condition_id_from_name(name);
    if (!id) {
        throw ParamsError("unknown condition '" + name + "'");
    }
    return *id;
}

DegreeCondition parse_which(const std::string& name) {
    if (name == "effective") return DegreeCondition::effective;
    if (name == "sequence") return DegreeCondition::sequence;
    throw ParamsError("condition must be 'effective' or 'sequence', got '" +
                      name + "'");
}

void print_report(std::ostream& out, const ConditionReport& report) {
    out << "condition " << report.condition_name << '\n';
    if (report.passed) {
        out << "result PASS\n";
    } else {
        const auto& v = *report.first_violation;
        out << "result FAIL vertex=" << v.vertex << " required=" << v.required
            << " actual=" << v.actual << '\n';
    }
}

int cmd_gen(const GlobalOptions& global, const std::string& family, int n,
            int k, int ell, const std::string& host_kind,
            const std::string& condition, std::uint64_t seed,
            const std::string& out_path, std::ostream& out) {
    std::optional<LabeledGraph> g;
    int witness = k;
    if (family == "power_path") {
        g = power_path(n, k);
    } else if (family == "power_cycle") {
        g = power_cycle(n, k);
        witness = n - 1;
    } else if (family == "extremal") {
        g = extremal(n, k, ell);
    } else if (family == "random_subgraph") {
        LabeledGraph host = host_kind == "cycle" ? power_cycle(n, k)
                                                 : power_path(n, k);
        witness = host_kind == "cycle" ? n - 1 : k;
        Params p{n, k, ell};
        g = sample_condition_subgraph(host, p, parse_condition(condition),
                                      seed);
    } else {
        throw ParamsError("unknown family '" + family + "'");
    }
    (void)global;
    if (out_path == "-") {
        write_edge_list(out, *g, witness);
    } else {
        auto file = open_out(out_path);
        write_edge_list(file, *g, witness);
        out << "wrote " << g->n() << " vertices, " << g->edge_count()
            << " edges to " << out_path << '\n';
    }
    return exit_code::ok;
}

int cmd_check(const GlobalOptions& global, const std::string& graph_path,
              int ell, int k_override, const std::string& which_name,
              const std::string& host_kind, std::ostream& out) {
    int file_k = 0;
    LabeledGraph g = load_graph(graph_path, !global.no_witness_check, &file_k);
    int k = k_override > 0 ? k_override : file_k;
    ConditionId id = parse_condition(which_name);
    ConditionReport report;
    if (id == ConditionId::effective || id == ConditionId::sequence) {
        Params p{g.n(), k, ell};
        report = check_subdivision_condition(
            g, p,
            id == ConditionId::effective ? DegreeCondition::effective
                                         : DegreeCondition::sequence);
    } else {
        LabeledGraph host = host_kind == "cycle" ? power_cycle(g.n(), k)
                                                 : power_path(g.n(), k);
        report = check_degree_floor(g, host, k,
                                    id == ConditionId::cycle_power
                                        ? FloorRule::cycle_power
                                        : FloorRule::half_plus_two);
    }
    out << "params n=" << g.n() << " k=" << k << " l=" << ell << '\n';
    print_report(out, report);
    return report.passed ? exit_code::ok : exit_code::condition;
}

int cmd_build(const GlobalOptions& global, const std::string& graph_path,
              int ell, int k_override, const std::string& which_name,
              const std::string& out_path, const std::string& walk_out,
              const std::string& trace_out, std::ostream& out) {
    int file_k = 0;
    LabeledGraph g = load_graph(graph_path, !global.no_witness_check, &file_k);
    int k = k_override > 0 ? k_override : file_k;
    Params p{g.n(), k, ell};
    DegreeCondition which = parse_which(which_name);
    out << "params n=" << p.n << " k=" << p.k << " l=" << p.ell << '\n';
    ConditionReport report = check_subdivision_condition(g, p, which);
    print_report(out, report);
    if (!report.passed) {
        return exit_code::condition;
    }
    BuildTrace trace;
    PathSystem ps = grow_paths(g, p, &trace);
    RootedSubdivision s = assemble(g, p, ps);
    VerifyResult verdict = verify_subdivision(g, s, p.ell);
    if (!verdict.ok) {
        out << "verification FAILED: " << invariant_name(verdict.violated)
            << ": " << verdict.detail << '\n';
        return exit_code::verification;
    }
    out << "verified subdivision roots " << s.root_u << ' ' << s.root_w
        << " branches " << s.branches.size() << '\n';
    {
        auto file = open_out(out_path);
        write_subdivision(file, s);
        out << "wrote subdivision to " << out_path << '\n';
    }
    if (p.ell <= 2) {
        std::string walk_path = walk_out.empty() ? out_path + ".walk"
                                                 : walk_out;
        auto file = open_out(walk_path);
        if (p.ell == 2) {
            write_cycle(file, cycle_from_subdivision(s));
            out << "wrote cycle to " << walk_path << '\n';
        } else {
            write_path(file, path_from_subdivision(s));
            out << "wrote path to " << walk_path << '\n';
        }
    }
    if (!trace_out.empty()) {
        auto file = open_out(trace_out);
        write_trace(file, trace);
        out << "wrote trace to " << trace_out << '\n';
    }
    return exit_code::ok;
}

int cmd_verify(const GlobalOptions& global, const std::string& graph_path,
               const std::string& subdivision_path, int ell_override,
               std::ostream& out) {
    LabeledGraph g = load_graph(graph_path, !global.no_witness_check, nullptr);
    std::ifstream in(subdivision_path);
    if (!in) {
        throw ParseError(subdivision_path + ": cannot open file");
    }
    RootedSubdivision s = read_subdivision(in, subdivision_path);
    int ell = ell_override > 0 ? ell_override
                               : static_cast<int>(s.branches.size());
    VerifyResult verdict = verify_subdivision(g, s, ell);
    if (verdict.ok) {
        out << "ok\n";
        return exit_code::ok;
    }
    out << "violated " << invariant_name(verdict.violated) << ": "
        << verdict.detail << '\n';
    return exit_code::verification;
}

int cmd_oracle(const GlobalOptions& global, const std::string& graph_path,
               const std::string& target, int root_u, int root_w, int ell,
               const std::string& out_path, std::ostream& out) {
    LabeledGraph g = load_graph(graph_path, !global.no_witness_check, nullptr);
    Certificate cert;
    if (target == "cycle") {
        auto cycle = has_hamilton_cycle(g, global.oracle_cap);
        if (cycle) {
            cert.kind = CertificateKind::hamilton_found;
            cert.cycle = std::move(*cycle);
        } else {
            cert.kind = CertificateKind::exhausted;
        }
    } else if (target == "subdivision") {
        int u = root_u;
        int w = root_w > 0 ? root_w : g.n();
        cert = decide_rooted_subdivision(g, u, w, ell, global.oracle_cap);
    } else {
        throw ParamsError("oracle target must be 'cycle' or 'subdivision'");
    }
    write_certificate(out, cert);
    if (!out_path.empty()) {
        auto file = open_out(out_path);
        write_certificate(file, cert);
    }
    return exit_code::ok;
}

int cmd_rgg(const GlobalOptions& global, int n, double r, double rlog,
            double eps, int trials, std::uint64_t seed_base, bool sandwich_only,
            const std::string& out_path, std::ostream& out) {
    if (trials < 1) {
        throw ParamsError("rgg needs at least one trial");
    }
    if ((r <= 0.0) == (rlog <= 0.0)) {
        throw ParamsError("give exactly one of --r and --rlog");
    }
    double radius = r > 0.0 ? r
                            : rlog * std::log(static_cast<double>(n)) /
                                  static_cast<double>(n);
    if (radius <= 0.0 || radius > 1.0) {
        throw ParamsError("radius must land in (0, 1], got " +
                          std::to_string(radius));
    }
    struct Row {
        TrialOutcome outcome;
        double runtime_ms = 0.0;
    };
    std::vector<Row> rows(static_cast<std::size_t>(trials));
    parallel_for(static_cast<std::size_t>(trials), global.jobs,
                 [&](std::size_t t) {
                     auto start = std::chrono::steady_clock::now();
                     std::uint64_t seed = seed_base + t;
                     GeometricSample sample = sample_rgg(n, radius, seed);
                     if (sandwich_only) {
                         SandwichReport sw = sandwich_check(sample, eps);
                         rows[t].outcome.seed = seed;
                         rows[t].outcome.k_low = sw.k_low;
                         rows[t].outcome.k_high = sw.k_high;
                         rows[t].outcome.sandwich_ok = sw.ok();
                     } else {
                         rows[t].outcome = resilience_trial(
                             sample, eps, seed ^ kAdversaryStreamSalt);
                     }
                     auto stop = std::chrono::steady_clock::now();
                     rows[t].runtime_ms =
                         std::chrono::duration<double, std::milli>(stop - start)
                             .count();
                 });
    int sandwich_count = 0, applicable = 0, hamiltonian = 0;
    std::ostringstream csv;
    csv << "seed,k_low,k_high,sandwich,threshold_ok,hamiltonian,runtime_ms\n";
    for (const auto& row : rows) {
        const auto& o = row.outcome;
        sandwich_count += o.sandwich_ok ? 1 : 0;
        applicable += (o.sandwich_ok && o.threshold_ok) ? 1 : 0;
        hamiltonian += o.hamiltonian ? 1 : 0;
        csv << o.seed << ',' << o.k_low << ',' << o.k_high << ','
            << (o.sandwich_ok ? 1 : 0) << ',' << (o.threshold_ok ? 1 : 0)
            << ',' << (o.hamiltonian ? 1 : 0) << ',' << std::fixed
            << std::setprecision(3) << row.runtime_ms << '\n';
        csv.unsetf(std::ios::fixed);
    }
    csv << "# summary trials=" << trials << " sandwich_ok=" << sandwich_count
        << " applicable=" << applicable << " hamiltonian=" << hamiltonian
        << '\n';
    {
        auto file = open_out(out_path);
        file << csv.str();
    }
    out << "trials " << trials << '\n'
        << "sandwich_ok " << sandwich_count << '\n'
        << "applicable " << applicable << '\n'
        << "hamiltonian " << hamiltonian << '\n'
        << "wrote " << out_path << '\n';
    return exit_code::ok;
}

int cmd_hunt(const GlobalOptions& global, const std::string& floor_name,
             int n_min, int n_max, int k_min, int k_max, int trials,
             std::uint64_t seed_base, const std::string& cert_out,
             std::ostream& out) {
    HuntConfig config;
    if (floor_name == "cycle_power") {
        config.rule = FloorRule::cycle_power;
    } else if (floor_name == "half_plus_two") {
        config.rule = FloorRule::half_plus_two;
    } else {
        throw ParamsError("floor must be 'cycle_power' or 'half_plus_two'");
    }
    config.n_min = n_min;
    config.n_max = n_max;
    config.k_min = k_min;
    config.k_max = k_max;
    config.trials = trials;
    config.seed_base = seed_base;
    config.oracle_cap = global.oracle_cap;
    config.jobs = global.jobs;
    HuntReport report = run_hunt(config);
    for (const auto& cell : report.cells) {
        out << "cell n=" << cell.n << " k=" << cell.k << ' ';
        switch (cell.status) {
        case CellStatus::ran:
            out << "ran trials=" << cell.trials_run
                << " counterexamples=" << cell.counterexamples << '\n';
            break;
        case CellStatus::vacuous:
            out << "vacuous (host fails its own floor)\n";
            break;
        case CellStatus::invalid_params:
            out << "invalid (no host for these parameters)\n";
            break;
        }
    }
    out << "total trials " << report.total_trials << ", counterexamples "
        << report.hits.size() << '\n';
    if (report.hits.empty()) {
        return exit_code::ok;
    }
    const Counterexample& hit = report.hits.front();
    auto file = open_out(cert_out);
    file << "# counterexample floor=" << floor_name << " n=" << hit.n
         << " k=" << hit.k << " seed=" << hit.seed << '\n';
    int witness = config.rule == FloorRule::cycle_power ? hit.n - 1 : hit.k;
    write_edge_list(file, hit.graph, witness);
    out << "wrote counterexample to " << cert_out << '\n';
    return exit_code::counterexample;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"spanning subdivisions and Hamilton cycles in graphs of "
                 "bounded bandwidth"};
    app.name("spansub");
    GlobalOptions global;
    app.add_option("--seed", global.seed, "default seed for seeded commands");
    app.add_option("--jobs", global.jobs, "worker threads for batch commands")
        ->check(CLI::Range(1, 256));
    app.add_option("--oracle-cap", global.oracle_cap,
                   "largest n the exhaustive oracles accept")
        ->check(CLI::Range(1, 24));
    app.add_flag("--no-witness-check", global.no_witness_check,
                 "skip the bandwidth witness check when loading graphs");
    // Global flags may follow the subcommand.
    app.fallthrough();
    app.require_subcommand(1);

    int rc = exit_code::ok;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph family member");
    struct {
        std::string family;
        int n = 0, k = 0, ell = 1;
        std::string host = "path";
        std::string condition = "sequence";
        std::uint64_t seed = 0;
        bool seed_given = false;
        std::string out_path = "-";
    } gen_opt;
    gen->add_option("--family", gen_opt.family,
                    "power_path | power_cycle | extremal | random_subgraph")
        ->required();
    gen->add_option("--n", gen_opt.n, "vertex count")->required();
    gen->add_option("--k", gen_opt.k, "power / bandwidth parameter")
        ->required();
    gen->add_option("--l", gen_opt.ell, "branch parameter (extremal, random)");
    gen->add_option("--host", gen_opt.host,
                    "random_subgraph host family: path | cycle");
    gen->add_option("--condition", gen_opt.condition,
                    "condition the random subgraph must keep: effective | "
                    "sequence | cycle_power | half_plus_two");
    gen->add_option("--gen-seed", gen_opt.seed, "sample seed");
    gen->add_option("--out", gen_opt.out_path, "output path ('-' = stdout)");
    gen->callback([&] {
        std::uint64_t seed = gen->count("--gen-seed") ? gen_opt.seed
                                                      : global.seed;
        rc = cmd_gen(global, gen_opt.family, gen_opt.n, gen_opt.k, gen_opt.ell,
                     gen_opt.host, gen_opt.condition, seed, gen_opt.out_path,
                     out);
    });

    // check
    auto* check = app.add_subcommand("check",
                                     "evaluate a degree condition on a graph");
    struct {
        std::string graph;
        int ell = 0, k = 0;
        std::string which = "sequence";
        std::string host = "path";
    } check_opt;
    check->add_option("graph", check_opt.graph, "edge-list file")->required();
    check->add_option("--l", check_opt.ell, "branch parameter")->required();
    check->add_option("--k", check_opt.k,
                      "override the bandwidth witness from the file header");
    check->add_option("--condition", check_opt.which,
                      "effective | sequence | cycle_power | half_plus_two");
    check->add_option("--host", check_opt.host,
                      "host family for the floor conditions: path | cycle");
    check->callback([&] {
        rc = cmd_check(global, check_opt.graph, check_opt.ell, check_opt.k,
                       check_opt.which, check_opt.host, out);
    });

    // build
    auto* build = app.add_subcommand(
        "build", "grow and assemble a rooted spanning subdivision");
    struct {
        std::string graph;
        int ell = 0, k = 0;
        std::string which = "sequence";
        std::string out_path;
        std::string walk_out;
        std::string trace_out;
    } build_opt;
    build->add_option("graph", build_opt.graph, "edge-list file")->required();
    build->add_option("--l", build_opt.ell, "branch count")->required();
    build->add_option("--k", build_opt.k,
                      "override the bandwidth witness from the file header");
    build->add_option("--condition", build_opt.which,
                      "sufficient condition to require: effective | sequence");
    build->add_option("--out", build_opt.out_path, "subdivision output path")
        ->required();
    build->add_option("--walk-out", build_opt.walk_out,
                      "cycle/path output path (default: <out>.walk)");
    build->add_option("--trace-out", build_opt.trace_out,
                      "growth trace output path");
    build->callback([&] {
        rc = cmd_build(global, build_opt.graph, build_opt.ell, build_opt.k,
                       build_opt.which, build_opt.out_path, build_opt.walk_out,
                       build_opt.trace_out, out);
    });

    // verify
    auto* verify = app.add_subcommand(
        "verify", "verify a subdivision file against a graph");
    struct {
        std::string graph;
        std::string subdivision;
        int ell = 0;
    } verify_opt;
    verify->add_option("graph", verify_opt.graph, "edge-list file")
        ->required();
    verify->add_option("subdivision", verify_opt.subdivision,
                       "subdivision file")
        ->required();
    verify->add_option("--l", verify_opt.ell,
                       "expected branch count (default: as in the file)");
    verify->callback([&] {
        rc = cmd_verify(global, verify_opt.graph, verify_opt.subdivision,
                        verify_opt.ell, out);
    });

    // oracle
    auto* oracle = app.add_subcommand(
        "oracle", "exhaustive search with certificate output");
    struct {
        std::string graph;
        std::string target = "subdivision";
        int root_u = 1, root_w = 0, ell = 2;
        std::string out_path;
    } oracle_opt;
    oracle->add_option("graph", oracle_opt.graph, "edge-list file")
        ->required();
    oracle->add_option("--target", oracle_opt.target,
                       "cycle | subdivision");
    oracle->add_option("--root-u", oracle_opt.root_u, "first root");
    oracle->add_option("--root-w", oracle_opt.root_w,
                       "second root (default: n)");
    oracle->add_option("--l", oracle_opt.ell, "branch count");
    oracle->add_option("--out", oracle_opt.out_path,
                       "also write the certificate to this path");
    oracle->callback([&] {
        rc = cmd_oracle(global, oracle_opt.graph, oracle_opt.target,
                        oracle_opt.root_u, oracle_opt.root_w, oracle_opt.ell,
                        oracle_opt.out_path, out);
    });

    // rgg
    auto* rgg = app.add_subcommand(
        "rgg", "random geometric sandwich and resilience trials");
    struct {
        int n = 0;
        double r = 0.0, rlog = 0.0, eps = 0.0;
        int trials = 1;
        std::uint64_t seed_base = 0;
        bool sandwich_only = false;
        std::string out_path;
    } rgg_opt;
    rgg->add_option("--n", rgg_opt.n, "points per sample")->required();
    rgg->add_option("--r", rgg_opt.r, "connection radius");
    rgg->add_option("--rlog", rgg_opt.rlog,
                    "radius as C * ln(n) / n for this C");
    rgg->add_option("--eps", rgg_opt.eps, "sandwich slack")->required();
    rgg->add_option("--trials", rgg_opt.trials, "number of seeded trials");
    rgg->add_option("--seed-base", rgg_opt.seed_base,
                    "seed of trial t is seed-base + t");
    rgg->add_flag("--sandwich-only", rgg_opt.sandwich_only,
                  "stop each trial after the sandwich check");
    rgg->add_option("--out", rgg_opt.out_path, "CSV output path")->required();
    rgg->callback([&] {
        rc = cmd_rgg(global, rgg_opt.n, rgg_opt.r, rgg_opt.rlog, rgg_opt.eps,
                     rgg_opt.trials, rgg_opt.seed_base, rgg_opt.sandwich_only,
                     rgg_opt.out_path, out);
    });

    // hunt
    auto* hunt = app.add_subcommand(
        "hunt", "sample floor-respecting subgraphs hunting non-Hamiltonian "
                "counterexamples");
    struct {
        std::string floor = "cycle_power";
        int n_min = 5, n_max = 10, k_min = 2, k_max = 3;
        int trials = 200;
        std::uint64_t seed_base = 0;
        std::string cert_out = "hunt_counterexample.txt";
    } hunt_opt;
    hunt->add_option("--floor", hunt_opt.floor,
                     "cycle_power | half_plus_two");
    hunt->add_option("--n-min", hunt_opt.n_min, "smallest n");
    hunt->add_option("--n-max", hunt_opt.n_max, "largest n");
    hunt->add_option("--k-min", hunt_opt.k_min, "smallest k");
    hunt->add_option("--k-max", hunt_opt.k_max, "largest k");
    hunt->add_option("--trials", hunt_opt.trials, "samples per cell");
    hunt->add_option("--seed-base", hunt_opt.seed_base, "first trial seed");
    hunt->add_option("--cert-out", hunt_opt.cert_out,
                     "where to dump a counterexample, if found");
    hunt->callback([&] {
        rc = cmd_hunt(global, hunt_opt.floor, hunt_opt.n_min, hunt_opt.n_max,
                      hunt_opt.k_min, hunt_opt.k_max, hunt_opt.trials,
                      hunt_opt.seed_base, hunt_opt.cert_out, out);
    });

    std::vector<const char*> argv;
    argv.push_back("spansub");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int cli_rc = app.exit(e, out, err);
        return cli_rc == 0 ? exit_code::ok : exit_code::params;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::parse;
    } catch (const BandwidthViolatedError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::witness;
    } catch (const ConditionFailedError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::condition;
    } catch (const RootDegreeTooSmallError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::assembly;
    } catch (const AssemblyError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::assembly;
    } catch (const TooLargeError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::too_large;
    } catch (const RootsAdjacentError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::params;
    } catch (const NotSubgraphError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::params;
    } catch (const HostFailsConditionError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::params;
    } catch (const ParamsError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::params;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::internal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_code::internal;
    }
    return rc;
}

} // namespace spansub
