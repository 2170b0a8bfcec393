#include "subdense/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "subdense/errors.hpp"
#include "subdense/prng.hpp"

namespace subdense {

namespace {

constexpr int kMaxReseeds = 32;

[[noreturn]] void give_up(const std::string& which) {
    throw InputError(which + ": failed to satisfy validation after " +
                     std::to_string(kMaxReseeds) + " reseeds");
}

}  // namespace

PlantedGraph gen_subdense_graph(const GenSpec& spec) {
    int n = spec.n;
    if (n < 2) throw InputError("gen_subdense_graph: need n >= 2");
    if (!(spec.psi >= Rational(1))) throw InputError("gen_subdense_graph: psi must be >= 1");
    long long d_min = (Rational(n) / spec.psi).ceil();
    long long cover_size = (spec.planted_fraction * Rational(n)).ceil();
    if (cover_size < 1 || cover_size > n)
        throw InputError("gen_subdense_graph: planted fraction out of (0,1]");
    if (cover_size < d_min)
        throw InputError("gen_subdense_graph: infeasible knobs, need rho*n >= n/psi (" +
                         std::to_string(cover_size) + " < " + std::to_string(d_min) + ")");
    if (d_min > n - 1)
        throw InputError("gen_subdense_graph: infeasible knobs, need n/psi <= n-1");
    // the cap yields when the density demand itself exceeds n/2, and by one
    // more when parity makes a d_min-regular layout impossible
    const int base_cap = static_cast<int>(std::max<long long>(n / 2, d_min));

    for (int attempt = 0; attempt < 3 * kMaxReseeds; ++attempt) {
        const int deg_cap = base_cap + attempt / kMaxReseeds;
        Rng rng(derive_seed(spec.seed, attempt));
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        std::vector<int> cover(perm.begin(), perm.begin() + cover_size);
        std::vector<char> in_cover(n, 0);
        for (int v : cover) in_cover[v] = 1;

        std::set<std::pair<int, int>> edges;
        std::vector<int> deg(n, 0);
        auto add_edge = [&](int u, int v) {
            auto e = std::minmax(u, v);
            if (edges.insert({e.first, e.second}).second) {
                ++deg[u];
                ++deg[v];
                return true;
            }
            return false;
        };

        // connectivity backbone: chain the cover, bridging through non-cover
        // vertices where possible so backbone edges count toward their
        // degree demand and the cover side stays below the cap
        std::vector<int> outside;
        for (int v : perm)
            if (!in_cover[v]) outside.push_back(v);
        for (std::size_t i = 1; i < cover.size(); ++i) {
            if (i - 1 < outside.size()) {
                add_edge(cover[i - 1], outside[i - 1]);
                add_edge(outside[i - 1], cover[i]);
            } else {
                add_edge(cover[i - 1], cover[i]);
            }
        }

        // raise degrees to the density demand, preferring low-degree partners
        bool ok = true;
        for (int round = 0; ok; ++round) {
            int v = -1;
            for (int u = 0; u < n; ++u)
                if (deg[u] < d_min && (v == -1 || deg[u] < deg[v])) v = u;
            if (v == -1) break;
            if (round > 8 * n * static_cast<int>(d_min) + 64) {
                ok = false;
                break;
            }
            std::vector<int> candidates;
            for (int w = 0; w < n; ++w) {
                if (w == v) continue;
                if (!in_cover[v] && !in_cover[w]) continue;  // edges must touch the cover
                if (edges.count(std::minmax(v, w))) continue;
                candidates.push_back(w);
            }
            if (candidates.empty()) {
                ok = false;
                break;
            }
            // cover-cover edges crowd the cap, so partners outside the cover
            // come first, then uncapped, then smallest degree
            auto rank = [&](int w) {
                return std::tuple<int, int, int>(in_cover[w] ? 1 : 0,
                                                 deg[w] >= deg_cap ? 1 : 0, deg[w]);
            };
            std::stable_sort(candidates.begin(), candidates.end(),
                             [&](int a, int b) { return rank(a) < rank(b); });
            int limit = 1;
            while (limit < static_cast<int>(candidates.size()) &&
                   rank(candidates[limit]) == rank(candidates[0]))
                ++limit;
            add_edge(v, candidates[rng.below(limit)]);
        }
        if (!ok) continue;

        PlantedGraph out;
        out.graph = Graph::from_edges_merged(
            n, std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
        std::sort(cover.begin(), cover.end());
        out.planted_cover = cover;

        // validate the claims that downstream tests rely on
        DensityProfile prof = density_profile(out.graph);
        if (prof.min_degree < d_min) continue;
        if (prof.max_degree > deg_cap) continue;
        if (!is_connected(out.graph)) continue;
        bool covered = true;
        for (auto [u, v] : out.graph.edges())
            covered = covered && (in_cover[u] || in_cover[v]);
        if (!covered) continue;
        return out;
    }
    give_up("gen_subdense_graph");
}

SetCoverInstance gen_dense_setcover(const GenSpec& spec) {
    int n = spec.n;
    int m = spec.set_count;
    if (n < 1 || m < 1) throw InputError("gen_dense_setcover: need n >= 1 and m >= 1");
    if (Rational(m) < spec.psi)
        throw InputError("gen_dense_setcover: need m >= psi");
    long long occ = (Rational(m) / spec.psi).ceil();

    for (int attempt = 0; attempt < kMaxReseeds; ++attempt) {
        Rng rng(derive_seed(spec.seed, attempt));
        std::vector<std::vector<int>> sets(m);
        std::vector<int> indices(m);
        std::iota(indices.begin(), indices.end(), 0);
        for (int e = 0; e < n; ++e) {
            rng.shuffle(indices);
            for (int j = 0; j < occ; ++j) sets[indices[j]].push_back(e);
        }
        SetCoverInstance inst = SetCoverInstance::make(n, std::move(sets));
        if (!inst.feasible) continue;
        if (density_psi_sc(inst) > spec.psi) continue;
        return inst;
    }
    give_up("gen_dense_setcover");
}

SteinerInstance gen_dense_steiner(const GenSpec& spec) {
    int n = spec.n;
    int k = spec.terminal_count;
    if (k < 1 || k >= n) throw InputError("gen_dense_steiner: need 1 <= |S| < n");
    int nonterm = n - k;
    if (Rational(nonterm) < spec.psi)
        throw InputError("gen_dense_steiner: need |V\\S| >= psi");
    long long wire = (Rational(nonterm) / spec.psi).ceil();

    for (int attempt = 0; attempt < kMaxReseeds; ++attempt) {
        Rng rng(derive_seed(spec.seed, attempt));
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        std::vector<int> terminals(perm.begin(), perm.begin() + k);
        std::vector<int> others(perm.begin() + k, perm.end());

        std::set<std::pair<int, int>> edges;
        auto add_edge = [&](int u, int v) {
            auto e = std::minmax(u, v);
            edges.insert({e.first, e.second});
        };

        // sparse connected backbone over the nonterminals plus a few extras
        for (std::size_t i = 1; i < others.size(); ++i) add_edge(others[i - 1], others[i]);
        for (int extra = nonterm / 3; extra > 0 && nonterm >= 2; --extra) {
            int a = others[rng.below(others.size())];
            int b = others[rng.below(others.size())];
            if (a != b) add_edge(a, b);
        }
        // wire each terminal to `wire` distinct random nonterminals
        std::vector<int> pool = others;
        for (int t : terminals) {
            rng.shuffle(pool);
            for (int j = 0; j < wire; ++j) add_edge(t, pool[j]);
        }

        Graph g = Graph::from_edges_merged(
            n, std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
        if (!is_connected(g)) continue;
        SteinerInstance inst = SteinerInstance::make(std::move(g), terminals);
        if (density_psi_st(inst) > spec.psi) continue;
        return inst;
    }
    give_up("gen_dense_steiner");
}

}  // namespace subdense
