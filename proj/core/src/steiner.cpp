#include "subdense/steiner.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "subdense/errors.hpp"

namespace subdense {

SteinerInstance SteinerInstance::make(Graph graph, std::vector<int> terminals) {
    std::sort(terminals.begin(), terminals.end());
    terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
    if (terminals.empty()) throw InputError("steiner instance needs at least one terminal");
    for (int t : terminals)
        if (t < 0 || t >= graph.vertex_count())
            throw InputError("terminal " + std::to_string(t) + " out of range");
    if (!is_connected(graph)) throw InputError("steiner instance graph is disconnected");
    SteinerInstance inst;
    inst.graph = std::move(graph);
    inst.terminals = std::move(terminals);
    return inst;
}

bool SteinerInstance::is_terminal(int v) const {
    return std::binary_search(terminals.begin(), terminals.end(), v);
}

std::vector<int> SteinerInstance::nonterminals() const {
    std::vector<int> out;
    out.reserve(graph.vertex_count() - terminals.size());
    for (int v = 0; v < graph.vertex_count(); ++v)
        if (!is_terminal(v)) out.push_back(v);
    return out;
}

SteinerTreeSolution make_steiner_solution(const SteinerInstance& inst,
                                          std::vector<std::pair<int, int>> tree_edges) {
    for (auto& [u, v] : tree_edges)
        if (u > v) std::swap(u, v);
    std::sort(tree_edges.begin(), tree_edges.end());
    tree_edges.erase(std::unique(tree_edges.begin(), tree_edges.end()), tree_edges.end());

    std::vector<int> spans;
    for (auto [u, v] : tree_edges) {
        if (!inst.graph.has_edge(u, v))
            throw InputError("tree edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") is not a graph edge");
        spans.push_back(u);
        spans.push_back(v);
    }
    std::sort(spans.begin(), spans.end());
    spans.erase(std::unique(spans.begin(), spans.end()), spans.end());
    if (tree_edges.empty()) spans = inst.terminals;

    if (static_cast<int>(tree_edges.size()) != static_cast<int>(spans.size()) - 1 &&
        !(tree_edges.empty() && spans.size() == 1))
        throw InputError("edge set is not a tree (count mismatch)");

    // connectivity over the edge set
    if (!spans.empty()) {
        std::vector<std::vector<int>> adj(inst.graph.vertex_count());
        for (auto [u, v] : tree_edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        std::vector<char> seen(inst.graph.vertex_count(), 0);
        std::vector<int> stack{spans.front()};
        seen[spans.front()] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++reached;
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        if (reached != static_cast<int>(spans.size()))
            throw InputError("edge set is not a tree (disconnected)");
    }
    for (int t : inst.terminals)
        if (!std::binary_search(spans.begin(), spans.end(), t))
            throw InputError("tree misses terminal " + std::to_string(t));

    SteinerTreeSolution sol;
    sol.cost = static_cast<int>(tree_edges.size());
    sol.tree_edges = std::move(tree_edges);
    sol.spans = std::move(spans);
    return sol;
}

Rational density_psi_st(const SteinerInstance& inst) {
    int n = inst.graph.vertex_count();
    int nonterm = n - static_cast<int>(inst.terminals.size());
    if (nonterm < 1) throw InputError("density_psi_st needs at least one nonterminal");
    int min_deg = nonterm;
    for (int t : inst.terminals) {
        int d = 0;
        for (int u : inst.graph.neighbors(t))
            if (!inst.is_terminal(u)) ++d;
        min_deg = std::min(min_deg, d);
    }
    if (min_deg == 0) return Rational::infinity();
    return Rational(nonterm, min_deg);
}

int star_pick(const Graph& g, const std::vector<int>& current_terminals,
              const std::vector<int>& used_centers) {
    std::vector<char> excluded(g.vertex_count(), 0);
    std::vector<char> terminal(g.vertex_count(), 0);
    for (int t : current_terminals) {
        excluded[t] = 1;
        terminal[t] = 1;
    }
    for (int v : used_centers) excluded[v] = 1;
    int best = -1;
    int best_count = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (excluded[v]) continue;
        int count = 0;
        for (int u : g.neighbors(v))
            if (terminal[u]) ++count;
        if (count > best_count) {
            best_count = count;
            best = v;
        }
    }
    if (best < 0) throw InputError("star_pick: no candidate nonterminal");
    return best;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

std::vector<std::vector<int>> all_pairs_distance(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, kInf));
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        auto& d = dist[s];
        d[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbors(u))
                if (d[v] == kInf) {
                    d[v] = d[u] + 1;
                    queue.push_back(v);
                }
        }
    }
    return dist;
}

// Walks a shortest path from v to target, stepping to the smallest-id
// neighbor that decreases the distance. Appends the traversed edges.
void emit_shortest_path(const Graph& g, const std::vector<std::vector<int>>& dist, int v,
                        int target, std::vector<std::pair<int, int>>& edges) {
    while (v != target) {
        int next = -1;
        for (int u : g.neighbors(v))
            if (dist[u][target] == dist[v][target] - 1) {
                next = u;
                break;
            }
        edges.emplace_back(v, next);
        v = next;
    }
}

class DreyfusWagner {
public:
    DreyfusWagner(const SteinerInstance& inst) : inst_(inst), g_(inst.graph) {
        n_ = g_.vertex_count();
        // the last terminal is the fixed root; subsets range over the rest
        base_ = inst.terminals;
        root_ = base_.back();
        base_.pop_back();
        k_ = static_cast<int>(base_.size());
        dist_ = all_pairs_distance(g_);
    }

    SteinerTreeSolution solve() {
        if (k_ == 0) return make_steiner_solution(inst_, {});
        f_.assign(1u << k_, {});
        for (unsigned mask = 1; mask < (1u << k_); ++mask) {
            f_[mask].assign(n_, kInf);
            if ((mask & (mask - 1)) == 0) {
                int t = base_[lowbit_index(mask)];
                for (int v = 0; v < n_; ++v) f_[mask][v] = dist_[t][v];
                continue;
            }
            std::vector<int> seed = merge_values(mask);
            relax(seed);
            f_[mask] = std::move(seed);
        }
        std::vector<std::pair<int, int>> edges;
        reconstruct((1u << k_) - 1, root_, edges);
        return make_steiner_solution(inst_, std::move(edges));
    }

private:
    static int lowbit_index(unsigned mask) { return __builtin_ctz(mask); }

    // min over canonical splits (Y contains the lowest bit) at each vertex
    std::vector<int> merge_values(unsigned mask) const {
        std::vector<int> out(n_, kInf);
        unsigned low = mask & (mask - 1) ? (1u << lowbit_index(mask)) : mask;
        for (unsigned sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
            if (!(sub & low)) continue;
            unsigned rest = mask ^ sub;
            if (!rest) continue;
            const auto& a = f_[sub];
            const auto& b = f_[rest];
            for (int v = 0; v < n_; ++v) {
                int s = a[v] >= kInf || b[v] >= kInf ? kInf : a[v] + b[v];
                if (s < out[v]) out[v] = s;
            }
        }
        return out;
    }

    // unit-weight Dijkstra over value buckets
    void relax(std::vector<int>& val) const {
        int cap = n_ + 1;
        std::vector<std::vector<int>> buckets(cap + 2);
        for (int v = 0; v < n_; ++v)
            if (val[v] <= cap) buckets[val[v]].push_back(v);
        for (int c = 0; c <= cap; ++c) {
            for (std::size_t i = 0; i < buckets[c].size(); ++i) {
                int u = buckets[c][i];
                if (val[u] != c) continue;
                for (int w : g_.neighbors(u))
                    if (val[w] > c + 1) {
                        val[w] = c + 1;
                        if (c + 1 <= cap) buckets[c + 1].push_back(w);
                    }
            }
        }
    }

    void reconstruct(unsigned mask, int v, std::vector<std::pair<int, int>>& edges) const {
        if ((mask & (mask - 1)) == 0) {
            emit_shortest_path(g_, dist_, v, base_[lowbit_index(mask)], edges);
            return;
        }
        std::vector<int> merged = merge_values(mask);
        int target = f_[mask][v];
        for (int u = 0; u < n_; ++u) {
            if (merged[u] >= kInf || dist_[u][v] >= kInf) continue;
            if (merged[u] + dist_[u][v] != target) continue;
            emit_shortest_path(g_, dist_, v, u, edges);
            unsigned low = 1u << lowbit_index(mask);
            for (unsigned sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
                if (!(sub & low)) continue;
                unsigned rest = mask ^ sub;
                if (!rest) continue;
                if (f_[sub][u] >= kInf || f_[rest][u] >= kInf) continue;
                if (f_[sub][u] + f_[rest][u] != merged[u]) continue;
                reconstruct(sub, u, edges);
                reconstruct(rest, u, edges);
                return;
            }
            throw std::logic_error("dreyfus-wagner: no split witness");
        }
        throw std::logic_error("dreyfus-wagner: no relaxation witness");
    }

    const SteinerInstance& inst_;
    const Graph& g_;
    int n_ = 0;
    int k_ = 0;
    int root_ = 0;
    std::vector<int> base_;
    std::vector<std::vector<int>> dist_;
    std::vector<std::vector<int>> f_;
};

}  // namespace

SteinerTreeSolution dreyfus_wagner(const SteinerInstance& inst, int terminal_cap) {
    int k = static_cast<int>(inst.terminals.size());
    if (k > terminal_cap)
        throw BudgetError("dreyfus_wagner: " + std::to_string(k) +
                          " terminals exceed the cap of " + std::to_string(terminal_cap));
    // keep 3^|S| * n and the DP table inside a sane envelope
    long double work = 1;
    for (int i = 0; i < k; ++i) work *= 3;
    work *= inst.graph.vertex_count();
    if (work > 4e9L)
        throw BudgetError("dreyfus_wagner: instance exceeds the work budget");
    if (k == 1) return make_steiner_solution(inst, {});
    DreyfusWagner dw(inst);
    return dw.solve();
}

}  // namespace subdense
