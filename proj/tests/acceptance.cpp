// Acceptance suite: every guarantee the library claims, exercised end to end
// against the brute-force oracles at desk scale. One PASS/FAIL line per
// criterion; the exit code is the number of failures.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "subdense/cvc.hpp"
#include "subdense/generators.hpp"
#include "subdense/oracles.hpp"
#include "subdense/prng.hpp"
#include "subdense/reductions.hpp"
#include "subdense/set_cover.hpp"
#include "subdense/steiner.hpp"
#include "subdense/vc.hpp"

using namespace subdense;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s — %s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    if (!ok) ++failures;
}

Graph random_connected(int n, double density, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    std::vector<char> present(static_cast<std::size_t>(n) * n, 0);
    auto add = [&](int u, int v) {
        if (u == v) return;
        if (u > v) std::swap(u, v);
        if (present[static_cast<std::size_t>(u) * n + v]) return;
        present[static_cast<std::size_t>(u) * n + v] = 1;
        edges.emplace_back(u, v);
    };
    for (int v = 1; v < n; ++v) add(v, static_cast<int>(rng.below(v)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < density) add(u, v);
    return Graph::from_edges(n, edges);
}

// 1. greedy set cover stays within ceil(psi ln n) on psi-dense instances
void criterion_greedy_bound() {
    const long long psis[] = {2, 3, 5, 10};
    Rng seeds(101);
    int ok = 0, total = 500;
    for (int i = 0; i < total; ++i) {
        GenSpec spec;
        spec.psi = Rational(psis[i % 4]);
        spec.n = 8 + static_cast<int>(seeds.below(193));
        spec.set_count = 12 + static_cast<int>(seeds.below(89));
        spec.seed = seeds.next();
        SetCoverInstance inst = gen_dense_setcover(spec);
        long long bound = static_cast<long long>(
            std::ceil(spec.psi.to_double() * std::log(static_cast<double>(spec.n))));
        if (greedy_sc(inst).size <= bound) ++ok;
    }
    report(1, "set cover greedy density bound", ok == total,
           std::to_string(ok) + "/" + std::to_string(total) + " within ceil(psi ln n)");
}

// 2. depth-bounded exhaustive set cover equals the 2^m oracle
void criterion_exact_sc() {
    Rng seeds(202);
    int ok = 0, total = 200;
    for (int i = 0; i < total; ++i) {
        GenSpec spec;
        spec.psi = Rational(2 + static_cast<long long>(seeds.below(2)));
        spec.n = 6 + static_cast<int>(seeds.below(18));
        spec.set_count = 6 + static_cast<int>(seeds.below(11));  // m <= 16
        spec.seed = seeds.next();
        SetCoverInstance inst = gen_dense_setcover(spec);
        ExactScResult res = exact_bounded_sc(inst);
        if (res.proven_optimal && res.solution.size == brute_sc(inst)) ++ok;
    }
    report(2, "bounded exact set cover equals the oracle", ok == total,
           std::to_string(ok) + "/" + std::to_string(total) + " exact matches");
}

// 3. Dreyfus-Wagner equals superset enumeration
void criterion_dreyfus_wagner() {
    Rng rng(303);
    int ok = 0, total = 300;
    for (int i = 0; i < total; ++i) {
        int n = 5 + static_cast<int>(rng.below(8));  // <= 12
        Graph g = random_connected(n, 0.25 + rng.unit() * 0.3, rng);
        std::vector<int> terms;
        int want = 2 + static_cast<int>(rng.below(5));  // <= 6
        for (int v = 0; v < n && static_cast<int>(terms.size()) < want; ++v)
            if (rng.unit() < 0.6) terms.push_back(v);
        if (terms.empty()) terms.push_back(0);
        SteinerInstance inst = SteinerInstance::make(g, terms);
        if (dreyfus_wagner(inst).cost == brute_steiner(inst)) ++ok;
    }
    report(3, "Dreyfus-Wagner matches the enumeration oracle", ok == total,
           std::to_string(ok) + "/" + std::to_string(total) + " exact matches");
}

// 4. the star-contraction scheme meets 1+delta and its extraction bounds
void criterion_mdstp() {
    const long long psis[] = {1, 2, 3};
    Rng seeds(404);
    int ok_ratio = 0, ok_extract = 0, total = 100;
    for (int i = 0; i < total; ++i) {
        GenSpec spec;
        spec.psi = Rational(psis[i % 3]);
        int nonterm = 10 + static_cast<int>(seeds.below(7));  // oracle-friendly
        int terms = 8 + static_cast<int>(seeds.below(13));    // <= 20
        spec.n = nonterm + terms;                             // <= 40
        spec.terminal_count = terms;
        spec.seed = seeds.next();
        SteinerInstance inst = gen_dense_steiner(spec);
        Rational delta = (i % 2 == 0) ? Rational(1, 2) : Rational(1);

        MdstpResult res = mdstp(inst, delta, spec.psi);
        int opt = brute_steiner(inst);
        bool ratio_ok = res.density_certified &&
                        Rational(res.tree.cost) <= (Rational(1) + delta) * Rational(opt);
        // replay the recorded star series: every pick must grab at least a
        // 1/(2 psi) fraction of the terminal set it faced
        long long s1 = static_cast<long long>(inst.terminals.size());
        for (const StarRecord& star : res.stars) {
            if (Rational(star.terminal_members) < Rational(s1) / (Rational(2) * spec.psi))
                ratio_ok = false;
            s1 = s1 - star.terminal_members + 1;
        }
        if (ratio_ok) ++ok_ratio;

        long long stop = mdstp_params(delta, spec.psi).stop_threshold;
        double limit = 2.0 * spec.psi.to_double() *
                           std::log(static_cast<double>(inst.terminals.size()) /
                                    static_cast<double>(stop)) +
                       1.0;
        if (res.extracted_count == 0 || static_cast<double>(res.extracted_count) <= limit)
            ++ok_extract;
    }
    report(4, "star-contraction scheme within 1+delta with lemma bounds",
           ok_ratio == total && ok_extract == total,
           std::to_string(ok_ratio) + "/" + std::to_string(total) + " ratios, " +
               std::to_string(ok_extract) + "/" + std::to_string(total) +
               " extraction-count bounds");
}

// 5 & 9. recursive sampling: statistical ratio, unconditional validity,
// and the (s+1)^t node budget on every trial
void criterion_recursive_sampling() {
    const long long psis[] = {2, 3, 4};
    const int sizes[] = {24, 32, 40, 48, 56, 64};
    Rng seeds(505);
    int total = 100, ratio_hits = 0;
    bool all_valid = true, budget_ok = true;
    for (int i = 0; i < total; ++i) {
        GenSpec spec;
        spec.n = sizes[i % 6];
        spec.psi = Rational(psis[i % 3]);
        spec.seed = seeds.next();
        PlantedGraph planted = gen_subdense_graph(spec);
        DensityProfile prof = density_profile(planted.graph);

        auto params = ii_params(prof.n, prof.max_degree, Rational(1), Rational(1, 10));
        if (!params) {
            all_valid = false;
            continue;
        }
        long double node_budget = std::pow(static_cast<long double>(params->sample_size + 1),
                                           static_cast<long double>(params->depth));
        int best = prof.n;
        for (std::uint64_t s = 0; s < 20; ++s) {
            IIResult run = ii_run(planted.graph, *params, seeds.next());
            best = std::min(best, run.cover.size);
            if (static_cast<long double>(run.nodes_explored) > node_budget) budget_ok = false;
            try {
                make_vc_solution(planted.graph, run.cover.cover);
            } catch (...) {
                all_valid = false;
            }
        }
        int tau = brute_vc(planted.graph);
        Rational bound = Rational(2) / (Rational(1) + gamma_bound(prof));
        if (Rational(best * 100) <= bound * Rational(tau) * Rational(105)) ++ratio_hits;
    }
    bool ratio_ok = ratio_hits >= 95;
    report(5, "recursive sampling ratio, best of 20 seeds", ratio_ok && all_valid,
           std::to_string(ratio_hits) +
               "/100 instances within bound*1.05 (need 95), validity " +
               (all_valid ? "100%" : "violated"));
    report(9, "recursion explores at most (s+1)^t nodes", budget_ok,
           budget_ok ? "all 2000 trials within budget" : "budget exceeded");
}

// 6. subset connected vertex cover against the constrained oracle
void criterion_scvc() {
    Rng rng(606);
    int ok = 0, total = 200;
    QbSteinerSolver qb = qb_exact_solver();
    for (int i = 0; i < total; ++i) {
        int n = 3 + static_cast<int>(rng.below(8));  // <= 10
        Graph g = random_connected(n, 0.2 + rng.unit() * 0.4, rng);
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (rng.unit() < 0.35) s.push_back(v);
        if (s.empty()) s.push_back(static_cast<int>(rng.below(n)));

        ConnectedCoverSolution sol = scvc(g, s, qb);
        bool contains = std::includes(sol.cover.begin(), sol.cover.end(), s.begin(), s.end());
        int opt = brute_cvc(g, s);
        Rational bound(2 * n, n + static_cast<int>(s.size()));
        if (bound < Rational(1)) bound = Rational(1);
        if (contains && Rational(sol.size) <= bound * Rational(opt)) ++ok;
    }
    report(6, "subset connected cover within max{r_qb, 2/(1+|S|/n)}", ok == total,
           std::to_string(ok) + "/" + std::to_string(total) + " hard-bound hits");
}

// 7. edge-gadget reduction: smt = |E| + vc_opt - 1 on sources with >= 2 edges
void criterion_reduction_identity() {
    Rng rng(707);
    int ok = 0, total = 500;
    for (int i = 0; i < total; ++i) {
        int n = 3 + static_cast<int>(rng.below(4));  // <= 6, so |E| >= 2
        Graph g = random_connected(n, 0.2 + rng.unit() * 0.6, rng);
        auto [inst, cert] = vc_to_steiner(g);
        if (brute_steiner(inst) == g.edge_count() + brute_vc(g) - 1) ++ok;
    }
    report(7, "reduction identity smt = |E| + vc_opt - 1", ok == total,
           std::to_string(ok) + "/" + std::to_string(total) + " identities");
}

// 8. densification: terminal degree >= 2k structurally, optima preserved
void criterion_densify() {
    Rng rng(808);
    int degree_ok = 0, cost_ok = 0, total = 50;
    for (int i = 0; i < total; ++i) {
        int n = 3 + static_cast<int>(rng.below(2));  // 3 or 4 source vertices
        Graph g = random_connected(n, 0.5, rng);
        auto [inst, cert] = vc_to_steiner(g);
        Rational delta = (i % 2 == 0) ? Rational(1, 2) : Rational(2, 3);
        auto [dense, dcert] = densify(inst, delta);

        int min_term_degree = dense.graph.vertex_count();
        for (int t = 0; t < static_cast<int>(dense.terminals.size()); ++t)
            min_term_degree = std::min(min_term_degree, dense.graph.degree(t));
        if (min_term_degree >= 2 * dcert.replica_count) ++degree_ok;
        if (dreyfus_wagner(dense).cost == dreyfus_wagner(inst).cost) ++cost_ok;
    }
    report(8, "densification degree bound and cost preservation",
           degree_ok == total && cost_ok == total,
           std::to_string(degree_ok) + "/" + std::to_string(total) + " degree checks, " +
               std::to_string(cost_ok) + "/" + std::to_string(total) + " cost matches");
}

}  // namespace

int main() {
    criterion_greedy_bound();
    criterion_exact_sc();
    criterion_dreyfus_wagner();
    criterion_mdstp();
    criterion_recursive_sampling();
    criterion_scvc();
    criterion_reduction_identity();
    criterion_densify();
    if (failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) failed\n", failures);
    return failures;
}
