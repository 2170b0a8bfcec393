#include <doctest.h>

#include <cmath>

#include "subdense/errors.hpp"
#include "subdense/generators.hpp"
#include "subdense/oracles.hpp"
#include "subdense/vc.hpp"
#include "test_util.hpp"

using namespace subdense;
using namespace testutil;

TEST_CASE("mm_two_approx") {
    SUBCASE("triangle forces size 2") {
        VertexCoverSolution sol = mm_two_approx(complete_graph(3));
        CHECK(sol.size == 2);
        CHECK(brute_vc(complete_graph(3)) == 2);
    }
    SUBCASE("edgeless graph yields the empty cover") {
        CHECK(mm_two_approx(Graph::from_edges(4, {})).size == 0);
    }
    SUBCASE("path on four vertices stays within twice the optimum") {
        Graph g = path_graph(4);
        VertexCoverSolution sol = mm_two_approx(g);
        int opt = brute_vc(g);
        CHECK(opt == 2);
        CHECK(sol.size <= 2 * opt);
    }
    SUBCASE("always within factor two of the oracle") {
        Rng rng(31);
        for (int i = 0; i < 25; ++i) {
            Graph g = random_connected_graph(4 + static_cast<int>(rng.below(12)), 0.35, rng);
            CHECK(mm_two_approx(g).size <= 2 * brute_vc(g));
        }
    }
}

TEST_CASE("threshold_r and the exact membership predicate") {
    SUBCASE("K4: r = 2, every vertex qualifies") {
        Graph g = complete_graph(4);
        CHECK(threshold_r(g) == doctest::Approx(2.0));
        CHECK(high_degree_set(g).size() == 4);
    }
    SUBCASE("C8: r just above 1, every vertex qualifies") {
        Graph g = cycle_graph(8);
        CHECK(threshold_r(g) == doctest::Approx(8.0 * (1.0 - std::sqrt(0.75))));
        CHECK(high_degree_set(g).size() == 8);
    }
    SUBCASE("edgeless graph: r = 0, everyone qualifies") {
        Graph g = Graph::from_edges(5, {});
        CHECK(threshold_r(g) == doctest::Approx(0.0));
        CHECK(high_degree_set(g).size() == 5);
    }
    SUBCASE("predicate agrees with the float form away from its boundary") {
        Rng rng(7);
        for (int i = 0; i < 25; ++i) {
            Graph g = random_connected_graph(4 + static_cast<int>(rng.below(10)), 0.4, rng);
            double r = threshold_r(g);
            for (int v = 0; v < g.vertex_count(); ++v) {
                double slack = g.degree(v) - r;
                if (std::abs(slack) < 1e-9) continue;
                CHECK(meets_degree_threshold(g.vertex_count(), g.edge_count(), g.degree(v)) ==
                      (slack > 0));
            }
        }
    }
}

TEST_CASE("gamma_bound") {
    SUBCASE("regular graphs with degree at most n/2 give 1/2") {
        CHECK(gamma_bound(density_profile(cycle_graph(6))) == Rational(1, 2));
        CHECK(gamma_bound(density_profile(cycle_graph(9))) == Rational(1, 2));
    }
    SUBCASE("complete graphs match tau = n-1 exactly") {
        for (int n : {3, 5, 8}) {
            CHECK(gamma_bound(density_profile(complete_graph(n))) == Rational(n - 1, n));
            CHECK(brute_vc(complete_graph(n)) == n - 1);
        }
    }
    SUBCASE("star K_{1,4} lands in the sparse branch") {
        Graph g = star_graph(4);
        CHECK(gamma_bound(density_profile(g)) == Rational(1, 5));
        // gamma * n equals the true optimum here
        CHECK(brute_vc(g) == 1);
    }
    SUBCASE("gamma * n never exceeds the oracle optimum") {
        Rng rng(13);
        for (int i = 0; i < 30; ++i) {
            Graph g = random_connected_graph(4 + static_cast<int>(rng.below(12)), 0.45, rng);
            Rational scaled = gamma_bound(density_profile(g)) * Rational(g.vertex_count());
            CHECK(scaled <= Rational(brute_vc(g)));
        }
    }
}

TEST_CASE("build_cover_from_subset") {
    SUBCASE("empty subset equals the plain 2-approximation") {
        Graph g = path_graph(5);
        CHECK(build_cover_from_subset(g, {}).cover == mm_two_approx(g).cover);
    }
    SUBCASE("a wasteful subset on K3 is discarded for the plain cover") {
        CHECK(build_cover_from_subset(complete_graph(3), {0}).size == 2);
    }
    SUBCASE("an optimal subset is returned unchanged") {
        Graph g = star_graph(4);
        VertexCoverSolution sol = build_cover_from_subset(g, {0});
        CHECK(sol.cover == std::vector<int>{0});

        Graph p = path_graph(4);
        CHECK(build_cover_from_subset(p, {1, 2}).cover == std::vector<int>{1, 2});
    }
    SUBCASE("result is always a valid cover no larger than the 2-approx") {
        Rng rng(19);
        for (int i = 0; i < 25; ++i) {
            Graph g = random_connected_graph(5 + static_cast<int>(rng.below(10)), 0.35, rng);
            std::vector<int> w;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (rng.unit() < 0.3) w.push_back(v);
            VertexCoverSolution sol = build_cover_from_subset(g, w);
            CHECK(sol.size <= mm_two_approx(g).size);
        }
    }
}

TEST_CASE("ii_params") {
    SUBCASE("n below 16 signals exact solving") {
        CHECK(!ii_params(15, 7, Rational(1), Rational(1, 10)).has_value());
    }
    SUBCASE("n = 10^6 with max degree n/2") {
        // direct evaluation of both expressions
        double lln = std::log(std::log(1e6));
        double llll = std::log(std::log(std::log(std::log(1e6))));
        long long s = std::llround((lln - llll) * (lln - llll));
        long long budget = static_cast<long long>(std::ceil(std::exp(std::sqrt((double)s))));
        long long needed = static_cast<long long>(std::ceil(8.0 * std::log(10.0)));
        CHECK(s == 7);
        CHECK(budget == 15);
        CHECK(needed == 19);

        auto p = ii_params(1000000, 500000, Rational(1), Rational(1, 10));
        REQUIRE(p.has_value());
        CHECK(p->sample_size == 7);
        CHECK(p->depth == 15);  // budget caps the degree-driven depth here
    }
    SUBCASE("max degree n-1 needs depth about 4 ln(1/eps)") {
        auto p = ii_params(1000000, 999999, Rational(1), Rational(1, 10));
        REQUIRE(p.has_value());
        CHECK(p->depth == static_cast<int>(std::ceil((4.0 * 1000000 / 999999) * std::log(10.0))));
        CHECK(p->depth == 10);
    }
    SUBCASE("bad arguments are rejected") {
        CHECK_THROWS_AS(ii_params(100, 0, Rational(1), Rational(1, 10)), InputError);
        CHECK_THROWS_AS(ii_params(100, 50, Rational(0), Rational(1, 10)), InputError);
        CHECK_THROWS_AS(ii_params(100, 50, Rational(1), Rational(2)), InputError);
    }
}

namespace {

IIParams small_params(int s, int t) {
    IIParams p;
    p.sample_size = s;
    p.depth = t;
    p.success_exponent = Rational(1);
    p.target_slack = Rational(1, 10);
    return p;
}

}  // namespace

TEST_CASE("ii_modified") {
    SUBCASE("C4: valid cover of size at least 2 for every seed") {
        Graph g = cycle_graph(4);
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            VertexCoverSolution sol = ii_modified(g, small_params(2, 3), seed);
            CHECK(sol.size >= 2);
            // bound 2/(1 + 1/2) applies: max degree 2 = n/2
            CHECK(sol.certified_ratio_bound == Rational(4, 3));
        }
    }
    SUBCASE("star K_{1,4}: max degree above n/2 certifies only 2") {
        VertexCoverSolution sol = ii_modified(star_graph(4), small_params(2, 2), 5);
        CHECK(sol.certified_ratio_bound == Rational(2));
    }
    SUBCASE("K4 at depth 2 finds the optimum via one removal") {
        Graph g = complete_graph(4);
        IIResult run = ii_run(g, small_params(3, 2), 42);
        CHECK(run.cover.size == 3);
        CHECK(run.removed_union == run.cover.cover);  // leaf remainder was edgeless
        CHECK(brute_vc(g) == 3);
    }
    SUBCASE("depth 1 degenerates to the leaf rule with empty W") {
        IIResult run = ii_run(cycle_graph(6), small_params(2, 1), 3);
        CHECK(run.removed_union.empty());
        CHECK(run.nodes_explored == 1);
    }
    SUBCASE("deterministic for a fixed seed, never worse than the 2-approx") {
        Rng rng(37);
        for (int i = 0; i < 15; ++i) {
            Graph g = random_connected_graph(6 + static_cast<int>(rng.below(12)), 0.4, rng);
            IIParams p = small_params(3, 4);
            IIResult a = ii_run(g, p, 1000 + i);
            IIResult b = ii_run(g, p, 1000 + i);
            CHECK(a.cover.cover == b.cover.cover);
            CHECK(a.nodes_explored == b.nodes_explored);
            CHECK(a.cover.size <= mm_two_approx(g).size);
            long double budget = std::pow(static_cast<long double>(p.sample_size + 1),
                                          static_cast<long double>(p.depth));
            CHECK(static_cast<long double>(a.nodes_explored) <= budget);
        }
    }
    SUBCASE("degenerate params are rejected") {
        CHECK_THROWS_AS(ii_run(cycle_graph(4), small_params(0, 2), 1), InputError);
        CHECK_THROWS_AS(ii_run(cycle_graph(4), small_params(2, 0), 1), InputError);
    }
    SUBCASE("W is disjoint from the leaf cover remainder") {
        Rng rng(41);
        Graph g = random_connected_graph(12, 0.4, rng);
        IIResult run = ii_run(g, small_params(2, 3), 7);
        // removed sets along one path are disjoint and all inside the cover
        for (int v : run.removed_union)
            CHECK(std::binary_search(run.cover.cover.begin(), run.cover.cover.end(), v));
    }
}

TEST_CASE("ii_modified ratio on a planted subdense instance") {
    GenSpec spec;
    spec.n = 60;
    spec.psi = Rational(4);
    spec.seed = 7;
    PlantedGraph planted = gen_subdense_graph(spec);
    DensityProfile prof = density_profile(planted.graph);
    REQUIRE(2 * prof.max_degree <= prof.n);

    int tau = brute_vc(planted.graph);
    Rational gamma = gamma_bound(prof);
    Rational ratio = Rational(2) / (Rational(1) + gamma);
    long long target = (ratio * Rational(tau)).ceil();

    auto params = ii_params(prof.n, prof.max_degree, Rational(1), Rational(1, 10));
    REQUIRE(params.has_value());
    int best = prof.n;
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        best = std::min(best, ii_modified(planted.graph, *params, seed).size);
    CHECK(best <= target);
}
