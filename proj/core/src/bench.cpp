#include "subdense/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "subdense/cvc.hpp"
#include "subdense/errors.hpp"
#include "subdense/generators.hpp"
#include "subdense/oracles.hpp"
#include "subdense/prng.hpp"
#include "subdense/set_cover.hpp"
#include "subdense/steiner.hpp"
#include "subdense/vc.hpp"

namespace subdense {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string TrialReport::to_json_line() const {
    std::ostringstream o;
    o << "{\"problem\": \"" << json_escape(problem) << "\""
      << ", \"instance_id\": \"" << json_escape(instance_id) << "\""
      << ", \"solver\": \"" << json_escape(solver) << "\""
      << ", \"seed\": " << seed << ", \"solution_size\": " << solution_size;
    o << ", \"oracle_optimum\": ";
    if (oracle_optimum) o << *oracle_optimum; else o << "null";
    o << ", \"empirical_ratio\": ";
    if (empirical_ratio) o << *empirical_ratio; else o << "null";
    o << ", \"certified_bound\": ";
    if (certified_bound) o << *certified_bound; else o << "null";
    o << ", \"nodes_or_states\": " << nodes_or_states << ", \"wall_ms\": " << wall_ms
      << ", \"valid\": " << (valid ? "true" : "false")
      << ", \"bound_violation\": " << (bound_violation ? "true" : "false") << "}";
    return o.str();
}

std::string CellSummary::to_json() const {
    std::ostringstream o;
    o << "{\"cell\": " << cell_index << ", \"problem\": \"" << json_escape(problem) << "\""
      << ", \"trials\": " << trials << ", \"with_oracle\": " << with_oracle
      << ", \"mean_ratio\": " << mean_ratio << ", \"max_ratio\": " << max_ratio
      << ", \"bound_violations\": " << bound_violations << ", \"invalid\": " << invalid
      << ", \"mean_wall_ms\": " << mean_wall_ms << ", \"mean_nodes\": " << mean_nodes << "}";
    return o.str();
}

namespace {

Rational rational_from_json(const nlohmann::json& j, const char* field) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                if (s.find('.') != std::string::npos) {
                    double d = std::stod(s);
                    return Rational(std::llround(d * 1000000), 1000000);
                }
                return Rational(std::stoll(s));
            }
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw InputError(std::string("bench matrix: cannot parse rational field `") +
                             field + "` from \"" + s + "\"");
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float()) return Rational(std::llround(j.get<double>() * 1000000), 1000000);
    throw InputError(std::string("bench matrix: field `") + field + "` is not a number");
}

}  // namespace

BenchMatrix parse_bench_matrix(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("bench matrix: ") + e.what());
    }
    if (!doc.is_array()) throw InputError("bench matrix: top-level JSON must be an array");
    BenchMatrix matrix;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& cell = doc[i];
        auto bad = [&](const std::string& why) {
            throw InputError("bench matrix cell " + std::to_string(i) + ": " + why);
        };
        if (!cell.is_object()) bad("not an object");
        BenchCell c;
        if (!cell.contains("problem") || !cell["problem"].is_string())
            bad("missing string field `problem`");
        c.problem = cell["problem"].get<std::string>();
        if (c.problem != "vc" && c.problem != "cvc" && c.problem != "sc" && c.problem != "st")
            bad("problem must be one of vc|cvc|sc|st");
        if (!cell.contains("n") || !cell["n"].is_number_integer()) bad("missing integer `n`");
        c.n = cell["n"].get<int>();
        if (cell.contains("psi")) c.psi = rational_from_json(cell["psi"], "psi");
        if (cell.contains("rho")) c.rho = rational_from_json(cell["rho"], "rho");
        if (cell.contains("epsilon")) c.epsilon = rational_from_json(cell["epsilon"], "epsilon");
        if (cell.contains("a")) c.a = rational_from_json(cell["a"], "a");
        if (cell.contains("delta")) c.delta = rational_from_json(cell["delta"], "delta");
        if (cell.contains("m")) c.m = cell["m"].get<int>();
        if (cell.contains("terminals")) c.terminals = cell["terminals"].get<int>();
        if (cell.contains("instances")) c.instances = cell["instances"].get<int>();
        if (cell.contains("seeds")) c.seeds = cell["seeds"].get<int>();
        if (cell.contains("oracle")) c.oracle = cell["oracle"].get<bool>();
        if (c.instances < 0 || c.seeds < 0) bad("instances/seeds must be nonnegative");
        matrix.cells.push_back(std::move(c));
    }
    return matrix;
}

BenchMatrix read_bench_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bench_matrix(buf.str());
}

namespace {

struct TrialJob {
    int cell_index;
    int instance_index;
    int seed_index;
};

TrialReport run_trial(const BenchCell& cell, int cell_index, int instance_index,
                      std::uint64_t instance_seed, std::uint64_t solver_seed) {
    TrialReport r;
    r.problem = cell.problem;
    r.instance_id = cell.problem + "-c" + std::to_string(cell_index) + "-i" +
                    std::to_string(instance_index);
    r.seed = solver_seed;
    auto start = std::chrono::steady_clock::now();
    auto stop_clock = [&] {
        r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    };

    try {
        if (cell.problem == "vc" || cell.problem == "cvc") {
            GenSpec spec;
            spec.n = cell.n;
            spec.psi = cell.psi;
            spec.planted_fraction = cell.rho;
            spec.seed = instance_seed;
            PlantedGraph inst = gen_subdense_graph(spec);
            DensityProfile prof = density_profile(inst.graph);
            auto params = ii_params(prof.n, prof.max_degree, cell.a, cell.epsilon);

            if (cell.problem == "vc") {
                if (!params) {
                    int opt = brute_vc(inst.graph);
                    r.solver = "brute_vc";
                    r.solution_size = opt;
                    r.oracle_optimum = opt;
                    r.certified_bound = 1.0;
                    r.empirical_ratio = 1.0;
                    r.valid = true;
                    stop_clock();
                    return r;
                }
                IIResult run = ii_run(inst.graph, *params, solver_seed);
                r.solver = "ii_modified";
                r.solution_size = run.cover.size;
                r.nodes_or_states = run.nodes_explored;
                if (run.cover.certified_ratio_bound)
                    r.certified_bound = run.cover.certified_ratio_bound->to_double();
                stop_clock();
                // revalidate against the original instance
                make_vc_solution(inst.graph, run.cover.cover);
                r.valid = true;
                if (cell.oracle && inst.graph.vertex_count() <= 64) {
                    int opt = brute_vc(inst.graph);
                    r.oracle_optimum = opt;
                    if (opt > 0) r.empirical_ratio = static_cast<double>(r.solution_size) / opt;
                }
            } else {
                if (!params) {
                    int opt = brute_cvc(inst.graph);
                    r.solver = "brute_cvc";
                    r.solution_size = opt;
                    r.oracle_optimum = opt;
                    r.certified_bound = 1.0;
                    r.empirical_ratio = 1.0;
                    r.valid = true;
                    stop_clock();
                    return r;
                }
                std::uint64_t nodes = 0;
                ConnectedCoverSolution sol =
                    cvc_subdense(inst.graph, *params, solver_seed, qb_mst_solver(), &nodes);
                r.solver = "cvc_subdense";
                r.solution_size = sol.size;
                r.nodes_or_states = nodes;
                if (sol.certified_ratio_bound)
                    r.certified_bound = sol.certified_ratio_bound->to_double();
                stop_clock();
                make_cvc_solution(inst.graph, sol.cover);
                r.valid = true;
                if (cell.oracle && inst.graph.vertex_count() <= 24) {
                    int opt = brute_cvc(inst.graph);
                    r.oracle_optimum = opt;
                    if (opt > 0) r.empirical_ratio = static_cast<double>(r.solution_size) / opt;
                }
            }
        } else if (cell.problem == "sc") {
            GenSpec spec;
            spec.n = cell.n;
            spec.set_count = cell.m;
            spec.psi = cell.psi;
            spec.seed = instance_seed;
            SetCoverInstance inst = gen_dense_setcover(spec);
            GreedyTrace trace;
            SetCoverSolution sol = greedy_sc(inst, &trace);
            r.solver = "greedy_sc";
            r.solution_size = sol.size;
            r.nodes_or_states = trace.newly_covered.size();
            r.certified_bound = 1.0 + std::log(std::max(1, inst.ground_size));
            stop_clock();
            make_sc_solution(inst, sol.chosen);
            r.valid = true;
            if (cell.oracle && inst.set_count() <= 20) {
                int opt = brute_sc(inst);
                r.oracle_optimum = opt;
                if (opt > 0) r.empirical_ratio = static_cast<double>(sol.size) / opt;
            }
        } else {  // st
            GenSpec spec;
            spec.n = cell.n;
            spec.terminal_count = cell.terminals;
            spec.psi = cell.psi;
            spec.seed = instance_seed;
            SteinerInstance inst = gen_dense_steiner(spec);
            MdstpResult res = mdstp(inst, cell.delta, cell.psi);
            r.solver = "mdstp";
            r.solution_size = res.tree.cost;
            r.nodes_or_states = static_cast<std::uint64_t>(res.extracted_count);
            if (res.certified_bound) r.certified_bound = res.certified_bound->to_double();
            stop_clock();
            make_steiner_solution(inst, res.tree.tree_edges);
            r.valid = true;
            if (cell.oracle &&
                inst.graph.vertex_count() - static_cast<int>(inst.terminals.size()) <= 20) {
                int opt = brute_steiner(inst);
                r.oracle_optimum = opt;
                if (opt > 0)
                    r.empirical_ratio = static_cast<double>(res.tree.cost) / opt;
                else if (res.tree.cost == 0)
                    r.empirical_ratio = 1.0;
            }
        }
    } catch (const std::exception& e) {
        stop_clock();
        r.solver = r.solver.empty() ? "failed" : r.solver;
        r.valid = false;
        return r;
    }

    if (r.empirical_ratio && r.certified_bound &&
        *r.empirical_ratio > *r.certified_bound + 1e-9)
        r.bound_violation = true;
    return r;
}

}  // namespace

BenchOutcome run_bench(const BenchMatrix& matrix, std::uint64_t master_seed, int jobs) {
    std::vector<TrialJob> trials;
    for (std::size_t c = 0; c < matrix.cells.size(); ++c)
        for (int i = 0; i < matrix.cells[c].instances; ++i)
            for (int s = 0; s < matrix.cells[c].seeds; ++s)
                trials.push_back({static_cast<int>(c), i, s});

    std::vector<TrialReport> reports(trials.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= trials.size()) break;
            const TrialJob& job = trials[idx];
            const BenchCell& cell = matrix.cells[job.cell_index];
            std::uint64_t instance_seed =
                derive_seed(master_seed, 1000003ULL * job.cell_index + job.instance_index);
            std::uint64_t solver_seed = derive_seed(instance_seed, 7919ULL + job.seed_index);
            reports[idx] =
                run_trial(cell, job.cell_index, job.instance_index, instance_seed, solver_seed);
        }
    };
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    BenchOutcome out;
    out.reports = std::move(reports);
    for (std::size_t c = 0; c < matrix.cells.size(); ++c) {
        CellSummary s;
        s.cell_index = static_cast<int>(c);
        s.problem = matrix.cells[c].problem;
        out.summaries.push_back(s);
    }
    std::size_t idx = 0;
    for (const TrialJob& job : trials) {
        const TrialReport& r = out.reports[idx++];
        CellSummary& s = out.summaries[job.cell_index];
        ++s.trials;
        if (!r.valid) {
            ++s.invalid;
            out.any_invalid = true;
        }
        if (r.bound_violation) ++s.bound_violations;
        if (r.empirical_ratio) {
            ++s.with_oracle;
            s.mean_ratio += *r.empirical_ratio;
            s.max_ratio = std::max(s.max_ratio, *r.empirical_ratio);
        }
        s.mean_wall_ms += static_cast<double>(r.wall_ms);
        s.mean_nodes += static_cast<double>(r.nodes_or_states);
    }
    for (CellSummary& s : out.summaries) {
        if (s.with_oracle > 0) s.mean_ratio /= s.with_oracle;
        if (s.trials > 0) {
            s.mean_wall_ms /= s.trials;
            s.mean_nodes /= s.trials;
        }
    }
    return out;
}

}  // namespace subdense
