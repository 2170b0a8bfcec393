#include "subdense/cvc.hpp"

#include <algorithm>
#include <stdexcept>

#include "subdense/errors.hpp"

namespace subdense {

ConnectedCoverSolution make_cvc_solution(const Graph& g, std::vector<int> cover,
                                         std::optional<Rational> bound) {
    VertexCoverSolution base = make_vc_solution(g, std::move(cover));

    ConnectedCoverSolution sol;
    sol.cover = std::move(base.cover);
    sol.size = base.size;
    sol.certified_ratio_bound = bound;

    if (sol.cover.empty()) return sol;  // vacuously connected
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : sol.cover) in[v] = 1;
    std::vector<int> parent(g.vertex_count(), -2);
    std::vector<int> queue{sol.cover.front()};
    parent[sol.cover.front()] = -1;
    int reached = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        ++reached;
        for (int v : g.neighbors(u)) {
            if (!in[v] || parent[v] != -2) continue;
            parent[v] = u;
            queue.push_back(v);
            sol.connectivity_certificate.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    if (reached != sol.size)
        throw InputError("cover does not induce a connected subgraph");
    std::sort(sol.connectivity_certificate.begin(), sol.connectivity_certificate.end());
    return sol;
}

std::vector<std::pair<int, int>> connected_maximal_matching(const Graph& g, int start) {
    if (start < 0 || start >= g.vertex_count())
        throw InputError("connected_maximal_matching: start vertex out of range");
    if (g.degree(start) == 0)
        throw InputError("connected_maximal_matching: start vertex has no incident edge");

    int n = g.vertex_count();
    std::vector<char> matched(n, 0);
    std::vector<char> touches_vm(n, 0);  // has a neighbor in V(M)
    std::vector<std::pair<int, int>> m;

    auto add_edge = [&](int u, int v) {
        matched[u] = matched[v] = 1;
        m.emplace_back(u, v);
        for (int w : g.neighbors(u)) touches_vm[w] = 1;
        for (int w : g.neighbors(v)) touches_vm[w] = 1;
    };

    add_edge(start, g.neighbors(start).front());

    for (;;) {
        int pick_u = -1, pick_v = -1;
        for (int u = 0; u < n && pick_u < 0; ++u) {
            if (matched[u] || !touches_vm[u]) continue;
            for (int v : g.neighbors(u))
                if (!matched[v]) {
                    pick_u = u;
                    pick_v = v;
                    break;
                }
        }
        if (pick_u < 0) break;
        add_edge(pick_u, pick_v);
    }
    return m;
}

namespace {

Rational subset_ratio(int n, int s_size, const Rational& qb_ratio) {
    Rational r = Rational(2 * n, n + s_size);  // 2 / (1 + |S|/n)
    return r > qb_ratio ? r : qb_ratio;
}

}  // namespace

ConnectedCoverSolution scvc(const Graph& g, const std::vector<int>& s,
                            const QbSteinerSolver& qb) {
    if (s.empty()) throw InputError("scvc: required set is empty");
    if (!is_connected(g)) throw InputError("scvc: graph is disconnected");
    int n = g.vertex_count();
    std::vector<char> in_s1(n, 0);
    for (int v : s) {
        if (v < 0 || v >= n) throw InputError("scvc: required vertex out of range");
        in_s1[v] = 1;
    }

    // phase 1: absorb connected maximal matchings until V \ S1 is independent
    for (;;) {
        std::vector<int> s1_list;
        for (int v = 0; v < n; ++v)
            if (in_s1[v]) s1_list.push_back(v);
        InducedSubgraph outside = remove_vertices(g, s1_list);
        if (outside.graph.edge_count() == 0) break;

        int start = -1;
        for (int v = 0; v < n; ++v) {
            if (in_s1[v]) continue;
            if (outside.graph.degree(outside.original_to_new[v]) == 0) continue;
            bool adj = false;
            for (int u : g.neighbors(v))
                if (in_s1[u]) {
                    adj = true;
                    break;
                }
            if (adj) {
                start = v;
                break;
            }
        }
        // unreachable for connected g: some edge-bearing outside vertex
        // always borders the growing S1
        if (start < 0) throw std::logic_error("scvc: no matching start adjacent to S1");

        auto matching =
            connected_maximal_matching(outside.graph, outside.original_to_new[start]);
        for (auto [a, b] : matching) {
            in_s1[outside.kept[a]] = 1;
            in_s1[outside.kept[b]] = 1;
        }
    }

    std::vector<int> s1_list;
    std::vector<int> outside_list;
    for (int v = 0; v < n; ++v) (in_s1[v] ? s1_list : outside_list).push_back(v);

    // phase 2: contract each connected component of G[S1]
    InducedSubgraph inside = remove_vertices(g, outside_list);
    std::vector<std::vector<int>> parts;
    for (const auto& comp : connected_components(inside.graph)) {
        std::vector<int> part;
        for (int v : comp) part.push_back(inside.kept[v]);
        parts.push_back(std::move(part));
    }

    std::vector<int> cover = s1_list;
    if (parts.size() > 1) {
        Contraction c = contract_sets(g, parts);
        std::vector<int> terminals;
        for (const auto& part : parts)
            terminals.push_back(c.map.original_to_super[part.front()]);
        std::sort(terminals.begin(), terminals.end());

        // the remaining vertices must form an independent set, making the
        // contracted instance quasi-bipartite
        std::vector<char> is_term(c.graph.vertex_count(), 0);
        for (int t : terminals) is_term[t] = 1;
        for (int u = 0; u < c.graph.vertex_count(); ++u) {
            if (is_term[u]) continue;
            for (int v : c.graph.neighbors(u))
                if (!is_term[v])
                    throw std::logic_error("scvc: V \\ S1 is not independent after phase 1");
        }

        // phase 3: connect the contracted components
        SteinerInstance contracted = SteinerInstance::make(c.graph, terminals);
        SteinerTreeSolution tree = qb.solve(contracted);
        for (int v : tree.spans)
            if (!is_term[v]) cover.push_back(c.map.super_members[v].front());
    }

    return make_cvc_solution(g, std::move(cover),
                             subset_ratio(n, static_cast<int>(s.size()), qb.guaranteed_ratio));
}

namespace {

void require_quasi_bipartite(const SteinerInstance& inst) {
    for (int v : inst.nonterminals())
        for (int u : inst.graph.neighbors(v))
            if (!inst.is_terminal(u))
                throw InputError("quasi-bipartite contract violation: nonterminals " +
                                 std::to_string(v) + " and " + std::to_string(u) +
                                 " are adjacent");
}

SteinerTreeSolution metric_closure_mst(const SteinerInstance& inst) {
    const Graph& g = inst.graph;
    int n = g.vertex_count();
    const auto& terms = inst.terminals;
    int k = static_cast<int>(terms.size());

    // BFS distances from every terminal
    std::vector<std::vector<int>> dist(k, std::vector<int>(n, -1));
    for (int i = 0; i < k; ++i) {
        auto& d = dist[i];
        std::vector<int> queue{terms[i]};
        d[terms[i]] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbors(u))
                if (d[v] < 0) {
                    d[v] = d[u] + 1;
                    queue.push_back(v);
                }
        }
    }

    // Prim over the terminal metric closure
    std::vector<char> in_tree(k, 0);
    std::vector<int> best_dist(k, -1), best_from(k, -1);
    in_tree[0] = 1;
    for (int i = 1; i < k; ++i) {
        best_dist[i] = dist[0][terms[i]];
        best_from[i] = 0;
    }
    std::vector<std::pair<int, int>> closure_edges;
    for (int round = 1; round < k; ++round) {
        int pick = -1;
        for (int i = 0; i < k; ++i) {
            if (in_tree[i]) continue;
            if (pick < 0 || best_dist[i] < best_dist[pick]) pick = i;
        }
        closure_edges.emplace_back(best_from[pick], pick);
        in_tree[pick] = 1;
        for (int i = 0; i < k; ++i)
            if (!in_tree[i] && dist[pick][terms[i]] < best_dist[i]) {
                best_dist[i] = dist[pick][terms[i]];
                best_from[i] = pick;
            }
    }

    // realize closure edges as shortest paths, smallest-id stepping
    std::vector<std::pair<int, int>> union_edges;
    for (auto [a, b] : closure_edges) {
        int v = terms[b];
        while (v != terms[a]) {
            int next = -1;
            for (int u : g.neighbors(v))
                if (dist[a][u] == dist[a][v] - 1) {
                    next = u;
                    break;
                }
            union_edges.emplace_back(std::min(v, next), std::max(v, next));
            v = next;
        }
    }
    std::sort(union_edges.begin(), union_edges.end());
    union_edges.erase(std::unique(union_edges.begin(), union_edges.end()), union_edges.end());

    // shortcut: spanning tree of the union, then prune nonterminal leaves
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : union_edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> parent(n, -2);
    std::vector<int> queue{terms[0]};
    parent[terms[0]] = -1;
    std::vector<std::pair<int, int>> tree_edges;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v : adj[u])
            if (parent[v] == -2) {
                parent[v] = u;
                queue.push_back(v);
                tree_edges.emplace_back(std::min(u, v), std::max(u, v));
            }
    }
    for (;;) {
        std::vector<int> deg(n, 0);
        for (auto [u, v] : tree_edges) {
            ++deg[u];
            ++deg[v];
        }
        std::size_t before = tree_edges.size();
        std::erase_if(tree_edges, [&](const std::pair<int, int>& e) {
            auto leaf = [&](int v) { return deg[v] == 1 && !inst.is_terminal(v); };
            return leaf(e.first) || leaf(e.second);
        });
        if (tree_edges.size() == before) break;
    }
    return make_steiner_solution(inst, std::move(tree_edges));
}

}  // namespace

QbSteinerSolver qb_mst_solver(int exact_substitution_cap) {
    QbSteinerSolver qb;
    qb.name = "mst";
    qb.guaranteed_ratio = Rational(2);
    qb.solve = [exact_substitution_cap](const SteinerInstance& inst) {
        require_quasi_bipartite(inst);
        if (static_cast<int>(inst.terminals.size()) <= exact_substitution_cap)
            return dreyfus_wagner(inst, exact_substitution_cap);
        return metric_closure_mst(inst);
    };
    return qb;
}

QbSteinerSolver qb_exact_solver(int terminal_cap) {
    QbSteinerSolver qb;
    qb.name = "exact";
    qb.guaranteed_ratio = Rational(1);
    qb.solve = [terminal_cap](const SteinerInstance& inst) {
        return dreyfus_wagner(inst, terminal_cap);
    };
    return qb;
}

ConnectedCoverSolution cvc_subdense(const Graph& g, const IIParams& params,
                                    std::uint64_t seed, const QbSteinerSolver& qb,
                                    std::uint64_t* nodes_explored) {
    if (!is_connected(g)) throw InputError("cvc_subdense: graph is disconnected");
    if (g.edge_count() == 0) throw InputError("cvc_subdense: graph has no edges");

    IIResult run = ii_run(g, params, seed);
    if (nodes_explored) *nodes_explored = run.nodes_explored;
    std::vector<int> w = run.removed_union;
    if (w.empty()) w = {mm_two_approx(g).cover.front()};

    ConnectedCoverSolution sol = scvc(g, w, qb);

    DensityProfile prof = density_profile(g);
    if (2 * prof.max_degree <= prof.n) {
        Rational gamma = gamma_bound(prof);
        Rational ratio = Rational(2) / (Rational(1) + gamma);
        sol.certified_ratio_bound = ratio > qb.guaranteed_ratio ? ratio : qb.guaranteed_ratio;
    } else {
        sol.certified_ratio_bound = std::nullopt;
    }
    return sol;
}

}  // namespace subdense
