#include <doctest.h>

#include <algorithm>

#include "subdense/cvc.hpp"
#include "subdense/errors.hpp"
#include "subdense/generators.hpp"
#include "subdense/oracles.hpp"
#include "test_util.hpp"

using namespace subdense;
using namespace testutil;

namespace {

bool induces_connected_cover(const Graph& g, const std::vector<int>& cover) {
    try {
        make_cvc_solution(g, cover);
        return true;
    } catch (const InputError&) {
        return false;
    }
}

}  // namespace

TEST_CASE("connected_maximal_matching") {
    SUBCASE("single edge") {
        Graph g = path_graph(2);
        auto m = connected_maximal_matching(g, 0);
        REQUIRE(m.size() == 1);
        CHECK(m[0] == std::pair<int, int>{0, 1});
    }
    SUBCASE("triangle: one edge, everything else touched") {
        auto m = connected_maximal_matching(complete_graph(3), 2);
        CHECK(m.size() == 1);
    }
    SUBCASE("path on five vertices from the left end") {
        auto m = connected_maximal_matching(path_graph(5), 0);
        REQUIRE(m.size() == 2);
        CHECK(m[0] == std::pair<int, int>{0, 1});
        CHECK(m[1] == std::pair<int, int>{2, 3});
    }
    SUBCASE("isolated start is an error") {
        Graph g = Graph::from_edges(3, {{1, 2}});
        CHECK_THROWS_AS(connected_maximal_matching(g, 0), InputError);
    }
    SUBCASE("matched set is connected and maximal within the component") {
        Rng rng(43);
        for (int i = 0; i < 25; ++i) {
            Graph g = random_connected_graph(4 + static_cast<int>(rng.below(12)), 0.3, rng);
            int start = static_cast<int>(rng.below(g.vertex_count()));
            if (g.degree(start) == 0) continue;
            auto m = connected_maximal_matching(g, start);
            std::vector<char> matched(g.vertex_count(), 0);
            std::vector<int> vm;
            for (auto [a, b] : m) {
                CHECK(!matched[a]);
                CHECK(!matched[b]);
                matched[a] = matched[b] = 1;
                vm.push_back(a);
                vm.push_back(b);
            }
            // G[V(M)] connected
            std::sort(vm.begin(), vm.end());
            std::vector<int> drop;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (!std::binary_search(vm.begin(), vm.end(), v)) drop.push_back(v);
            CHECK(is_connected(remove_vertices(g, drop).graph));
            // no edge of the component has both endpoints unmatched
            for (auto [u, v] : g.edges())
                CHECK((matched[u] || matched[v]));
        }
    }
}

TEST_CASE("scvc") {
    SUBCASE("star with the center required is already optimal") {
        ConnectedCoverSolution sol = scvc(star_graph(4), {0}, qb_exact_solver());
        CHECK(sol.cover == std::vector<int>{0});
        CHECK(sol.certified_ratio_bound == Rational(10, 6));  // 2n/(n+1), n=5
    }
    SUBCASE("requiring everything returns everything") {
        Graph g = cycle_graph(5);
        ConnectedCoverSolution sol = scvc(g, {0, 1, 2, 3, 4}, qb_exact_solver());
        CHECK(sol.size == 5);
    }
    SUBCASE("C6 seeded with one vertex") {
        Graph g = cycle_graph(6);
        ConnectedCoverSolution sol = scvc(g, {0}, qb_exact_solver());
        CHECK(induces_connected_cover(g, sol.cover));
        CHECK(std::binary_search(sol.cover.begin(), sol.cover.end(), 0));
        int opt = brute_cvc(g, {0});
        CHECK(sol.size <= (Rational(2 * 6, 6 + 1) * Rational(opt)).ceil());
    }
    SUBCASE("input contract violations") {
        CHECK_THROWS_AS(scvc(cycle_graph(4), {}, qb_exact_solver()), InputError);
        Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});
        CHECK_THROWS_AS(scvc(split, {0}, qb_exact_solver()), InputError);
    }
    SUBCASE("C6 seeded with one vertex grows a deterministic arc") {
        // the matching grows from vertex 1, absorbing {1,2,3,4}; a connected
        // cover of a 6-cycle must be a 5-arc, so this is optimal
        ConnectedCoverSolution sol = scvc(cycle_graph(6), {0}, qb_exact_solver());
        CHECK(sol.cover == std::vector<int>{0, 1, 2, 3, 4});
        CHECK(brute_cvc(cycle_graph(6), {0}) == 5);
    }
    SUBCASE("three legs force three matching rounds") {
        // star of three 3-paths hanging off vertex 0
        Graph g = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6},
                                         {0, 7}, {7, 8}, {8, 9}});
        ConnectedCoverSolution sol = scvc(g, {0}, qb_exact_solver());
        CHECK(sol.cover == std::vector<int>{0, 1, 2, 4, 5, 7, 8});
        CHECK(sol.size == brute_cvc(g, {0}));
    }
    SUBCASE("disconnected seed components are joined through the Steiner phase") {
        // seeding with two leg tips leaves {6} cut off from the big
        // component after phase 1; the contracted instance reconnects it
        Graph g = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6},
                                         {0, 7}, {7, 8}, {8, 9}});
        ConnectedCoverSolution sol = scvc(g, {3, 6}, qb_exact_solver());
        CHECK(std::binary_search(sol.cover.begin(), sol.cover.end(), 3));
        CHECK(std::binary_search(sol.cover.begin(), sol.cover.end(), 6));
        int opt = brute_cvc(g, {3, 6});
        CHECK(Rational(sol.size) <= Rational(2 * 10, 10 + 2) * Rational(opt));
    }
    SUBCASE("hard ratio bound against the subset-constrained oracle") {
        Rng rng(47);
        for (int i = 0; i < 30; ++i) {
            int n = 4 + static_cast<int>(rng.below(9));
            Graph g = random_connected_graph(n, 0.35, rng);
            std::vector<int> s;
            for (int v = 0; v < n; ++v)
                if (rng.unit() < 0.3) s.push_back(v);
            if (s.empty()) s.push_back(static_cast<int>(rng.below(n)));
            ConnectedCoverSolution sol = scvc(g, s, qb_exact_solver());
            for (int v : s) CHECK(std::binary_search(sol.cover.begin(), sol.cover.end(), v));
            int opt = brute_cvc(g, s);
            Rational bound(2 * n, n + static_cast<int>(s.size()));
            CHECK(Rational(sol.size) <= bound * Rational(opt));
        }
    }
}

TEST_CASE("qb steiner plug-ins") {
    SUBCASE("two terminals joined through one nonterminal") {
        Graph g = path_graph(3);
        SteinerInstance inst = SteinerInstance::make(g, {0, 2});
        SteinerTreeSolution sol = qb_mst_solver(0).solve(inst);
        CHECK(sol.cost == 2);
    }
    SUBCASE("pairwise-adjacent terminals need no nonterminals") {
        Graph g = complete_graph(5);
        SteinerInstance inst = SteinerInstance::make(g, {0, 1, 2, 3, 4});
        CHECK(qb_mst_solver(0).solve(inst).cost == 4);
    }
    SUBCASE("quasi-bipartite contract is enforced") {
        Graph g = path_graph(4);  // nonterminals 1,2 adjacent
        SteinerInstance inst = SteinerInstance::make(g, {0, 3});
        CHECK_THROWS_AS(qb_mst_solver(0).solve(inst), InputError);
        CHECK_NOTHROW(qb_exact_solver().solve(inst));
    }
    SUBCASE("mst heuristic stays within twice the exact cost") {
        Rng rng(59);
        for (int i = 0; i < 20; ++i) {
            // random quasi-bipartite instance: terminals + independent middle
            int terms = 3 + static_cast<int>(rng.below(5));
            int mids = 2 + static_cast<int>(rng.below(4));
            std::vector<std::pair<int, int>> edges;
            for (int x = 0; x < mids; ++x) {
                int attach = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(terms) - 1));
                std::vector<int> pool(terms);
                for (int t = 0; t < terms; ++t) pool[t] = t;
                rng.shuffle(pool);
                for (int j = 0; j < attach; ++j) edges.emplace_back(pool[j], terms + x);
            }
            for (int t = 1; t < terms; ++t)
                if (rng.unit() < 0.4) edges.emplace_back(t - 1, t);
            Graph g = Graph::from_edges_merged(terms + mids, edges);
            if (!is_connected(g)) continue;
            std::vector<int> terminal_ids(terms);
            for (int t = 0; t < terms; ++t) terminal_ids[t] = t;
            SteinerInstance inst = SteinerInstance::make(g, terminal_ids);
            int mst_cost = qb_mst_solver(0).solve(inst).cost;
            int exact_cost = dreyfus_wagner(inst).cost;
            CHECK(mst_cost >= exact_cost);
            CHECK(mst_cost <= 2 * exact_cost);
        }
    }
}

TEST_CASE("cvc_subdense") {
    IIParams params;
    params.sample_size = 3;
    params.depth = 3;

    SUBCASE("valid connected cover for every seed") {
        Rng rng(67);
        for (int i = 0; i < 10; ++i) {
            Graph g = random_connected_graph(8 + static_cast<int>(rng.below(8)), 0.4, rng);
            for (std::uint64_t seed = 0; seed < 4; ++seed) {
                ConnectedCoverSolution sol = cvc_subdense(g, params, seed, qb_mst_solver());
                CHECK(induces_connected_cover(g, sol.cover));
            }
        }
    }
    SUBCASE("C4 certifies 4/3 with the exact plug-in") {
        ConnectedCoverSolution sol = cvc_subdense(cycle_graph(4), params, 1, qb_exact_solver());
        CHECK(sol.certified_ratio_bound == Rational(4, 3));
    }
    SUBCASE("no certificate when the max degree exceeds n/2") {
        ConnectedCoverSolution sol = cvc_subdense(star_graph(4), params, 1, qb_exact_solver());
        CHECK(!sol.certified_ratio_bound.has_value());
    }
    SUBCASE("disconnected or edgeless inputs are rejected") {
        CHECK_THROWS_AS(
            cvc_subdense(Graph::from_edges(4, {{0, 1}, {2, 3}}), params, 1, qb_exact_solver()),
            InputError);
    }
    SUBCASE("planted instances: best of 20 seeds against the oracle") {
        GenSpec spec;
        spec.n = 16;
        spec.psi = Rational(2);
        spec.seed = 3;
        PlantedGraph planted = gen_subdense_graph(spec);
        DensityProfile prof = density_profile(planted.graph);
        REQUIRE(2 * prof.max_degree <= prof.n);

        int best = prof.n;
        std::optional<Rational> bound;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            ConnectedCoverSolution sol =
                cvc_subdense(planted.graph, params, seed, qb_exact_solver());
            best = std::min(best, sol.size);
            bound = sol.certified_ratio_bound;
        }
        REQUIRE(bound.has_value());
        int opt = brute_cvc(planted.graph);
        CHECK(Rational(best) <= *bound * Rational(opt) * Rational(105, 100));
    }
}
