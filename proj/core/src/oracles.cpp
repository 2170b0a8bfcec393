#include "subdense/oracles.hpp"

#include <algorithm>
#include <string>

#include "subdense/errors.hpp"

namespace subdense {

namespace {

constexpr int kVcGuard = 64;
constexpr int kCvcGuard = 24;
constexpr int kScGuard = 20;
constexpr int kSteinerNonterminalGuard = 20;

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbors(v)) adj[v] |= Mask{1} << u;
    return adj;
}

int popcount(Mask m) { return __builtin_popcountll(m); }

// Greedy maximal matching size over the active subgraph: a lower bound on
// the vertex cover of that subgraph.
int matching_lower_bound(const std::vector<Mask>& adj, Mask active) {
    int lb = 0;
    Mask left = active;
    while (left) {
        int v = __builtin_ctzll(left);
        left &= left - 1;
        Mask nbrs = adj[v] & left;
        if (nbrs) {
            int u = __builtin_ctzll(nbrs);
            left &= ~(Mask{1} << u);
            ++lb;
        }
    }
    return lb;
}

struct VcSearch {
    const std::vector<Mask>& adj;
    int best;

    void run(Mask active, int chosen) {
        if (chosen >= best) return;
        // degree-0/1 reductions
        for (;;) {
            bool changed = false;
            Mask scan = active;
            while (scan) {
                int v = __builtin_ctzll(scan);
                scan &= scan - 1;
                if (!(active & (Mask{1} << v))) continue;  // removed earlier this pass
                Mask nbrs = adj[v] & active;
                int d = popcount(nbrs);
                if (d == 0) {
                    active &= ~(Mask{1} << v);
                    changed = true;
                } else if (d == 1) {
                    int u = __builtin_ctzll(nbrs);
                    active &= ~(Mask{1} << v);
                    active &= ~(Mask{1} << u);
                    ++chosen;
                    if (chosen >= best) return;
                    changed = true;
                }
            }
            if (!changed) break;
        }
        if (!active) {
            best = std::min(best, chosen);
            return;
        }
        if (chosen + matching_lower_bound(adj, active) >= best) return;

        // branch on a maximum-degree vertex
        int pivot = -1, pivot_deg = -1;
        Mask scan = active;
        while (scan) {
            int v = __builtin_ctzll(scan);
            scan &= scan - 1;
            int d = popcount(adj[v] & active);
            if (d > pivot_deg) {
                pivot_deg = d;
                pivot = v;
            }
        }
        Mask nbrs = adj[pivot] & active;
        // pivot excluded => all its neighbors enter the cover
        run(active & ~nbrs & ~(Mask{1} << pivot), chosen + pivot_deg);
        // pivot in the cover
        run(active & ~(Mask{1} << pivot), chosen + 1);
    }
};

}  // namespace

int brute_vc(const Graph& g) {
    int n = g.vertex_count();
    if (n > kVcGuard)
        throw BudgetError("brute_vc: " + std::to_string(n) + " vertices exceed the guard of " +
                          std::to_string(kVcGuard));
    if (g.edge_count() == 0) return 0;
    auto adj = adjacency_masks(g);
    Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    VcSearch search{adj, n};
    search.run(all, 0);
    return search.best;
}

std::vector<int> brute_vc_cover(const Graph& g) {
    int n = g.vertex_count();
    if (n > 20)
        throw BudgetError("brute_vc_cover: " + std::to_string(n) +
                          " vertices exceed the guard of 20");
    auto adj = adjacency_masks(g);
    int best_size = n + 1;
    Mask best = 0;
    for (Mask mask = 0; mask < (Mask{1} << n); ++mask) {
        int size = popcount(mask);
        if (size > best_size) continue;
        bool covers = true;
        for (int v = 0; v < n && covers; ++v)
            if (!(mask & (Mask{1} << v)) && (adj[v] & ~mask)) covers = false;
        if (!covers) continue;
        if (size < best_size) {
            best_size = size;
            best = mask;
        }
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (best & (Mask{1} << v)) out.push_back(v);
    return out;
}

namespace {

bool induces_connected(const std::vector<Mask>& adj, Mask subset) {
    if (!subset) return true;
    Mask reached = subset & (~subset + 1);  // lowest set bit
    for (;;) {
        Mask frontier = reached;
        Mask grown = reached;
        while (frontier) {
            int v = __builtin_ctzll(frontier);
            frontier &= frontier - 1;
            grown |= adj[v] & subset;
        }
        if (grown == reached) break;
        reached = grown;
    }
    return reached == subset;
}

struct CvcSearch {
    const std::vector<Mask>& adj;
    Mask required;
    int n;
    int best;
    Mask best_found;

    // decide vertices in id order; `excluded` must stay independent
    void run(int v, Mask chosen, Mask excluded, int chosen_count) {
        if (chosen_count >= best) return;
        if (v == n) {
            if ((chosen & required) == required && induces_connected(adj, chosen)) {
                best = chosen_count;
                best_found = chosen;
            }
            return;
        }
        Mask bit = Mask{1} << v;
        // exclude v unless it is required or has an excluded neighbor
        if (!(required & bit) && !(adj[v] & excluded)) run(v + 1, chosen, excluded | bit, chosen_count);
        run(v + 1, chosen | bit, excluded, chosen_count + 1);
    }
};

}  // namespace

int brute_cvc(const Graph& g, const std::vector<int>& required) {
    int n = g.vertex_count();
    if (n > kCvcGuard)
        throw BudgetError("brute_cvc: " + std::to_string(n) + " vertices exceed the guard of " +
                          std::to_string(kCvcGuard));
    Mask req = 0;
    for (int v : required) {
        if (v < 0 || v >= n) throw InputError("brute_cvc: required vertex out of range");
        req |= Mask{1} << v;
    }
    auto adj = adjacency_masks(g);
    CvcSearch search{adj, req, n, n + 1, 0};
    search.run(0, 0, 0, 0);
    if (search.best > n) throw InputError("brute_cvc: no feasible connected cover");
    return search.best;
}

int brute_sc(const SetCoverInstance& inst) {
    int m = inst.set_count();
    if (m > kScGuard)
        throw BudgetError("brute_sc: " + std::to_string(m) + " sets exceed the guard of " +
                          std::to_string(kScGuard));
    if (!inst.feasible) throw InputError("brute_sc: infeasible instance");
    if (inst.ground_size == 0) return 0;

    int blocks = (inst.ground_size + 63) / 64;
    std::vector<std::vector<Mask>> set_mask(m, std::vector<Mask>(blocks, 0));
    std::vector<Mask> full(blocks, 0);
    for (int e = 0; e < inst.ground_size; ++e) full[e / 64] |= Mask{1} << (e % 64);
    for (int i = 0; i < m; ++i)
        for (int e : inst.sets[i]) set_mask[i][e / 64] |= Mask{1} << (e % 64);

    // union[f] = union[f without lowest set] | that set, one pass over 2^m
    std::vector<Mask> uni((std::size_t{1} << m) * blocks, 0);
    int best = m + 1;
    for (std::size_t f = 1; f < (std::size_t{1} << m); ++f) {
        int low = __builtin_ctzll(f);
        std::size_t rest = f & (f - 1);
        bool covers = true;
        for (int b = 0; b < blocks; ++b) {
            Mask u = uni[rest * blocks + b] | set_mask[low][b];
            uni[f * blocks + b] = u;
            covers = covers && u == full[b];
        }
        if (covers) best = std::min(best, popcount(static_cast<Mask>(f)));
    }
    if (best > m) throw InputError("brute_sc: no covering family");
    return best;
}

int brute_steiner(const SteinerInstance& inst) {
    int n = inst.graph.vertex_count();
    auto nonterm = inst.nonterminals();
    int h = static_cast<int>(nonterm.size());
    if (h > kSteinerNonterminalGuard)
        throw BudgetError("brute_steiner: " + std::to_string(h) +
                          " nonterminals exceed the guard of " +
                          std::to_string(kSteinerNonterminalGuard));
    if (n > 64) throw BudgetError("brute_steiner: more than 64 vertices");

    auto adj = adjacency_masks(inst.graph);
    Mask term_mask = 0;
    for (int t : inst.terminals) term_mask |= Mask{1} << t;

    int best = n;  // a connected graph always admits the full vertex set
    for (std::size_t pick = 0; pick < (std::size_t{1} << h); ++pick) {
        Mask subset = term_mask;
        for (int i = 0; i < h; ++i)
            if (pick & (std::size_t{1} << i)) subset |= Mask{1} << nonterm[i];
        int size = popcount(subset);
        if (size - 1 >= best) continue;
        if (induces_connected(adj, subset)) best = size - 1;
    }
    return best;
}

}  // namespace subdense
