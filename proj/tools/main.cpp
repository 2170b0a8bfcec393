#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "subdense/bench.hpp"
#include "subdense/cvc.hpp"
#include "subdense/dimacs.hpp"
#include "subdense/errors.hpp"
#include "subdense/generators.hpp"
#include "subdense/oracles.hpp"
#include "subdense/prng.hpp"
#include "subdense/reductions.hpp"
#include "subdense/set_cover.hpp"
#include "subdense/steiner.hpp"
#include "subdense/stp_format.hpp"
#include "subdense/vc.hpp"

namespace {

using json = nlohmann::json;
using namespace subdense;

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos)
            return Rational(std::stoll(text.substr(0, slash)),
                            std::stoll(text.substr(slash + 1)));
        if (text.find('.') != std::string::npos) {
            double d = std::stod(text);
            return Rational(std::llround(d * 1000000), 1000000);
        }
        return Rational(std::stoll(text));
    } catch (const std::exception&) {
        throw InputError("cannot parse rational value \"" + text + "\"");
    }
}

struct StopWatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

json edge_list_json(const std::vector<std::pair<int, int>>& edges) {
    json out = json::array();
    for (auto [u, v] : edges) out.push_back(json::array({u, v}));
    return out;
}

void emit(const json& doc, bool as_json) {
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    for (auto it = doc.begin(); it != doc.end(); ++it)
        std::cout << it.key() << ": " << it.value().dump() << "\n";
}

int cmd_gen(const std::string& kind, int n, const std::string& psi, std::uint64_t seed,
            const std::string& rho, int m, int terminals, const std::string& out_path) {
    GenSpec spec;
    spec.n = n;
    spec.psi = parse_rational(psi);
    spec.seed = seed;
    if (kind == "vc") {
        spec.planted_fraction = parse_rational(rho);
        PlantedGraph out = gen_subdense_graph(spec);
        std::ofstream f(out_path);
        if (!f) throw InputError("cannot open " + out_path + " for writing");
        f << "c generated subdense instance, seed " << seed << "\n";
        f << "c planted cover:";
        for (int v : out.planted_cover) f << " " << v + 1;
        f << "\n";
        write_dimacs(f, out.graph);
    } else if (kind == "sc") {
        spec.set_count = m;
        write_setcover_file(out_path, gen_dense_setcover(spec));
    } else if (kind == "st") {
        spec.terminal_count = terminals;
        write_stp_file(out_path, gen_dense_steiner(spec), "generated");
    } else {
        throw InputError("gen: unknown kind \"" + kind + "\" (vc|sc|st)");
    }
    std::cerr << "wrote " << out_path << "\n";
    return 0;
}

int cmd_solve_vc(const std::string& input, std::uint64_t seed, int trials,
                 const std::string& eps, const std::string& a, bool as_json) {
    Graph g = read_dimacs_file(input);
    StopWatch watch;
    DensityProfile prof = density_profile(g);
    json report;
    if (g.edge_count() == 0) {
        report = {{"size", 0},         {"cover", json::array()}, {"certified_bound", 1.0},
                  {"trials", 0},       {"best_seed", nullptr},   {"nodes_explored", 0},
                  {"solver", "empty"}, {"wall_ms", watch.ms()}};
        emit(report, as_json);
        return 0;
    }
    auto params = ii_params(prof.n, prof.max_degree, parse_rational(a), parse_rational(eps));
    if (!params) {
        // too small for the sampling parameters; solve exactly
        std::vector<int> cover = brute_vc_cover(g);
        report = {{"size", cover.size()},
                  {"cover", cover},
                  {"certified_bound", 1.0},
                  {"trials", 1},
                  {"best_seed", nullptr},
                  {"nodes_explored", 0},
                  {"solver", "brute_vc"},
                  {"wall_ms", watch.ms()}};
        emit(report, as_json);
        return 0;
    }
    IIResult best;
    std::uint64_t best_seed = seed;
    std::uint64_t total_nodes = 0;
    for (int i = 0; i < std::max(1, trials); ++i) {
        IIResult run = ii_run(g, *params, seed + static_cast<std::uint64_t>(i));
        total_nodes += run.nodes_explored;
        if (best.cover.cover.empty() || run.cover.size < best.cover.size) {
            best = run;
            best_seed = seed + static_cast<std::uint64_t>(i);
        }
    }
    report = {{"size", best.cover.size},
              {"cover", best.cover.cover},
              {"certified_bound", best.cover.certified_ratio_bound
                                      ? json(best.cover.certified_ratio_bound->to_double())
                                      : json(nullptr)},
              {"certified_bound_exact", best.cover.certified_ratio_bound
                                            ? json(best.cover.certified_ratio_bound->str())
                                            : json(nullptr)},
              {"trials", std::max(1, trials)},
              {"best_seed", best_seed},
              {"nodes_explored", total_nodes},
              {"solver", "ii_modified"},
              {"wall_ms", watch.ms()}};
    emit(report, as_json);
    return 0;
}

int cmd_solve_cvc(const std::string& input, std::uint64_t seed, int trials,
                  const std::string& qb_name, const std::string& eps, const std::string& a,
                  bool as_json) {
    Graph g = read_dimacs_file(input);
    StopWatch watch;
    DensityProfile prof = density_profile(g);
    QbSteinerSolver qb = qb_name == "exact" ? qb_exact_solver() : qb_mst_solver();
    auto params = ii_params(prof.n, prof.max_degree, parse_rational(a), parse_rational(eps));

    std::optional<ConnectedCoverSolution> best;
    std::uint64_t best_seed = seed;
    std::uint64_t total_nodes = 0;
    if (!params) {
        // small instance: seed the subset solver with a full sampling skip
        IIParams tiny;
        tiny.sample_size = 2;
        tiny.depth = 2;
        params = tiny;
    }
    for (int i = 0; i < std::max(1, trials); ++i) {
        std::uint64_t nodes = 0;
        ConnectedCoverSolution sol =
            cvc_subdense(g, *params, seed + static_cast<std::uint64_t>(i), qb, &nodes);
        total_nodes += nodes;
        if (!best || sol.size < best->size) {
            best = sol;
            best_seed = seed + static_cast<std::uint64_t>(i);
        }
    }
    json report = {{"size", best->size},
                   {"cover", best->cover},
                   {"certified_bound", best->certified_ratio_bound
                                           ? json(best->certified_ratio_bound->to_double())
                                           : json(nullptr)},
                   {"trials", std::max(1, trials)},
                   {"best_seed", best_seed},
                   {"nodes_explored", total_nodes},
                   {"connectivity_certificate", edge_list_json(best->connectivity_certificate)},
                   {"solver", std::string("cvc_subdense+") + qb.name},
                   {"wall_ms", watch.ms()}};
    emit(report, as_json);
    return 0;
}

int cmd_solve_sc(const std::string& input, const std::string& mode, std::uint64_t budget,
                 bool as_json) {
    SetCoverInstance inst = read_setcover_file(input);
    StopWatch watch;
    json report;
    if (mode == "greedy") {
        SetCoverSolution sol = greedy_sc(inst);
        report = {{"mode", "greedy"},
                  {"size", sol.size},
                  {"chosen", sol.chosen},
                  {"psi", density_psi_sc(inst).str()},
                  {"wall_ms", watch.ms()}};
    } else if (mode == "exact") {
        ExactScResult res = exact_bounded_sc(inst, budget);
        report = {{"mode", "exact"},
                  {"size", res.solution.size},
                  {"chosen", res.solution.chosen},
                  {"proven_optimal", res.proven_optimal},
                  {"families_checked", res.families_checked},
                  {"psi", density_psi_sc(inst).str()},
                  {"wall_ms", watch.ms()}};
    } else {
        throw InputError("solve-sc: unknown mode \"" + mode + "\" (greedy|exact)");
    }
    emit(report, as_json);
    return 0;
}

int cmd_solve_st(const std::string& input, const std::string& delta,
                 const std::string& psi, bool as_json) {
    SteinerInstance inst = read_stp_file(input);
    StopWatch watch;
    std::optional<Rational> psi_opt;
    if (!psi.empty()) psi_opt = parse_rational(psi);
    MdstpResult res = mdstp(inst, parse_rational(delta), psi_opt);
    json stars = json::array();
    for (const StarRecord& s : res.stars)
        stars.push_back({{"center", s.center}, {"terminal_members", s.terminal_members}});
    json report = {{"cost", res.tree.cost},
                   {"tree_edges", edge_list_json(res.tree.tree_edges)},
                   {"phase1_stars", stars},
                   {"extracted", res.extracted_count},
                   {"certified_bound", res.certified_bound
                                           ? json(res.certified_bound->to_double())
                                           : json(nullptr)},
                   {"density_certified", res.density_certified},
                   {"wall_ms", watch.ms()}};
    emit(report, as_json);
    return 0;
}

int cmd_oracle(const std::string& kind, const std::string& input, bool as_json) {
    StopWatch watch;
    int optimum = 0;
    if (kind == "vc")
        optimum = brute_vc(read_dimacs_file(input));
    else if (kind == "cvc")
        optimum = brute_cvc(read_dimacs_file(input));
    else if (kind == "sc")
        optimum = brute_sc(read_setcover_file(input));
    else if (kind == "st")
        optimum = brute_steiner(read_stp_file(input));
    else
        throw InputError("oracle: unknown kind \"" + kind + "\" (vc|cvc|sc|st)");
    emit({{"problem", kind}, {"optimum", optimum}, {"wall_ms", watch.ms()}}, as_json);
    return 0;
}

int cmd_reduce_vc_to_st(const std::string& input, const std::string& output) {
    Graph g = read_dimacs_file(input);
    auto [inst, cert] = vc_to_steiner(g);
    write_stp_file(output, inst, "vc_to_steiner");
    std::ofstream side(output + ".cert.json");
    side << certificate_to_json(cert) << "\n";
    std::cerr << "wrote " << output << " and " << output << ".cert.json\n";
    return 0;
}

int cmd_reduce_densify(const std::string& input, const std::string& delta,
                       const std::string& output) {
    SteinerInstance inst = read_stp_file(input);
    auto [dense, cert] = densify(inst, parse_rational(delta));
    write_stp_file(output, dense, "densified");
    std::ofstream side(output + ".cert.json");
    side << certificate_to_json(cert) << "\n";
    std::cerr << "wrote " << output << " and " << output << ".cert.json\n";
    return 0;
}

int cmd_bench(const std::string& matrix_path, std::uint64_t seed, int jobs,
              const std::string& out_path, bool table) {
    BenchMatrix matrix = read_bench_matrix_file(matrix_path);
    BenchOutcome outcome = run_bench(matrix, seed, jobs);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw InputError("cannot open " + out_path + " for writing");
        out = &file;
    }
    if (table) {
        *out << "cell problem trials oracle mean_ratio max_ratio violations invalid "
                "mean_wall_ms mean_nodes\n";
        for (const CellSummary& s : outcome.summaries)
            *out << s.cell_index << " " << s.problem << " " << s.trials << " " << s.with_oracle
                 << " " << s.mean_ratio << " " << s.max_ratio << " " << s.bound_violations
                 << " " << s.invalid << " " << s.mean_wall_ms << " " << s.mean_nodes << "\n";
    } else {
        for (const TrialReport& r : outcome.reports) *out << r.to_json_line() << "\n";
        *out << "{\"summary\": [";
        for (std::size_t i = 0; i < outcome.summaries.size(); ++i) {
            if (i) *out << ", ";
            *out << outcome.summaries[i].to_json();
        }
        *out << "]}\n";
    }
    if (outcome.any_invalid) {
        std::cerr << "bench: at least one trial produced an invalid solution\n";
        return 4;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solvers, generators, oracles, and reductions for subdense covering and "
                 "Steiner tree instances"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    std::uint64_t budget = 50'000'000;
    bool as_json = false;
    app.add_option("--seed", seed, "master seed")->capture_default_str();
    app.add_option("--budget", budget, "node budget for exhaustive searches")
        ->capture_default_str();
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a psi-dense instance");
    std::string gen_kind, gen_psi = "2", gen_rho = "1/2", gen_out;
    int gen_n = 0, gen_m = 0, gen_terminals = 0;
    gen->add_option("kind", gen_kind, "vc|sc|st")->required();
    gen->add_option("--n", gen_n, "instance size")->required();
    gen->add_option("--psi", gen_psi, "density parameter");
    gen->add_option("--rho", gen_rho, "planted cover fraction (vc)");
    gen->add_option("--m", gen_m, "set count (sc)");
    gen->add_option("--terminals", gen_terminals, "terminal count (st)");
    gen->add_option("--out", gen_out, "output file")->required();
    gen->add_option("--seed", seed, "instance seed");

    // solve-vc
    auto* svc = app.add_subcommand("solve-vc", "vertex cover via recursive sampling");
    std::string svc_input, svc_eps = "1/10", svc_a = "1";
    int svc_trials = 1;
    svc->add_option("--input", svc_input, "DIMACS graph")->required();
    svc->add_option("--seed", seed, "base seed");
    svc->add_option("--trials", svc_trials, "number of seeds to try");
    svc->add_option("--epsilon", svc_eps, "depth slack in (0,1)");
    svc->add_option("--a", svc_a, "success exponent");

    // solve-cvc
    auto* scvc_cmd = app.add_subcommand("solve-cvc", "connected vertex cover pipeline");
    std::string scvc_input, scvc_qb = "mst", scvc_eps = "1/10", scvc_a = "1";
    int scvc_trials = 1;
    scvc_cmd->add_option("--input", scvc_input, "DIMACS graph")->required();
    scvc_cmd->add_option("--seed", seed, "base seed");
    scvc_cmd->add_option("--trials", scvc_trials, "number of seeds to try");
    scvc_cmd->add_option("--qb", scvc_qb, "quasi-bipartite subroutine: mst|exact");
    scvc_cmd->add_option("--epsilon", scvc_eps, "depth slack in (0,1)");
    scvc_cmd->add_option("--a", scvc_a, "success exponent");

    // solve-sc
    auto* ssc = app.add_subcommand("solve-sc", "set cover greedy or depth-bounded exact");
    std::string ssc_input, ssc_mode = "greedy";
    ssc->add_option("--input", ssc_input, "set cover file")->required();
    ssc->add_option("--mode", ssc_mode, "greedy|exact");
    ssc->add_option("--budget", budget, "family budget for exact mode");

    // solve-st
    auto* sst = app.add_subcommand("solve-st", "Steiner tree star-contraction scheme");
    std::string sst_input, sst_delta = "1/2", sst_psi;
    sst->add_option("--input", sst_input, "STP file")->required();
    sst->add_option("--delta", sst_delta, "approximation slack")->required();
    sst->add_option("--psi", sst_psi, "density parameter (defaults to the measured value)");

    // oracle
    auto* orc = app.add_subcommand("oracle", "exact optimum at desk scale");
    std::string orc_kind, orc_input;
    orc->add_option("kind", orc_kind, "vc|cvc|sc|st")->required();
    orc->add_option("--input", orc_input, "instance file")->required();

    // reduce
    auto* red = app.add_subcommand("reduce", "constructive instance transformations");
    red->require_subcommand(1);
    auto* red_vc = red->add_subcommand("vc-to-st", "edge-gadget reduction to Steiner tree");
    std::string red_in, red_out;
    red_vc->add_option("--input", red_in, "DIMACS graph")->required();
    red_vc->add_option("--output", red_out, "STP output")->required();
    auto* red_d = red->add_subcommand("densify", "replica densification");
    std::string red_d_in, red_d_out, red_d_delta = "1/2";
    red_d->add_option("--input", red_d_in, "STP input")->required();
    red_d->add_option("--delta", red_d_delta, "density exponent in (0,1)")->required();
    red_d->add_option("--output", red_d_out, "STP output")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "run a benchmark matrix");
    std::string bench_matrix, bench_out;
    int bench_jobs = 1;
    bool bench_table = false;
    bench->add_option("--matrix", bench_matrix, "JSON matrix file")->required();
    bench->add_option("--out", bench_out, "report file (default stdout)");
    bench->add_option("--jobs", bench_jobs, "worker pool size");
    bench->add_option("--seed", seed, "master seed");
    bench->add_flag("--table", bench_table, "render per-cell summaries as text");

    // let the global --json/--budget flags appear after the subcommand name
    for (CLI::App* sub : app.get_subcommands(nullptr)) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(gen_kind, gen_n, gen_psi, seed, gen_rho, gen_m, gen_terminals,
                           gen_out);
        if (svc->parsed())
            return cmd_solve_vc(svc_input, seed, svc_trials, svc_eps, svc_a, as_json);
        if (scvc_cmd->parsed())
            return cmd_solve_cvc(scvc_input, seed, scvc_trials, scvc_qb, scvc_eps, scvc_a,
                                 as_json);
        if (ssc->parsed()) return cmd_solve_sc(ssc_input, ssc_mode, budget, as_json);
        if (sst->parsed()) return cmd_solve_st(sst_input, sst_delta, sst_psi, as_json);
        if (orc->parsed()) return cmd_oracle(orc_kind, orc_input, as_json);
        if (red->parsed()) {
            if (red_vc->parsed()) return cmd_reduce_vc_to_st(red_in, red_out);
            if (red_d->parsed()) return cmd_reduce_densify(red_d_in, red_d_delta, red_d_out);
        }
        if (bench->parsed())
            return cmd_bench(bench_matrix, seed, bench_jobs, bench_out, bench_table);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
