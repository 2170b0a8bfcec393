#include "subdense/graph.hpp"

#include <algorithm>
#include <string>

#include "subdense/errors.hpp"

namespace subdense {

namespace {

void check_endpoint(int v, int n) {
    if (v < 0 || v >= n)
        throw InputError("vertex id " + std::to_string(v) + " out of range [0, " +
                         std::to_string(n) + ")");
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw InputError("negative vertex count");
    Graph g;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        check_endpoint(u, n);
        check_endpoint(v, n);
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& a = g.adj_[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw InputError("duplicate edge at vertex " + std::to_string(v));
    }
    g.edge_count_ = static_cast<int>(edges.size());
    return g;
}

Graph Graph::from_edges_merged(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw InputError("negative vertex count");
    Graph g;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        check_endpoint(u, n);
        check_endpoint(v, n);
        if (u == v) continue;
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    int m = 0;
    for (int v = 0; v < n; ++v) {
        auto& a = g.adj_[v];
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        m += static_cast<int>(a.size());
    }
    g.edge_count_ = m / 2;
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

DensityProfile density_profile(const Graph& g) {
    DensityProfile p;
    p.n = g.vertex_count();
    long long m = g.edge_count();
    p.avg_degree = p.n > 0 ? Rational(2 * m, p.n) : Rational(0);
    p.max_degree = 0;
    p.min_degree = p.n > 0 ? p.n : 0;
    for (int v = 0; v < p.n; ++v) {
        p.max_degree = std::max(p.max_degree, g.degree(v));
        p.min_degree = std::min(p.min_degree, g.degree(v));
    }
    if (p.n == 0) p.min_degree = 0;
    p.psi_everywhere = p.min_degree > 0 ? Rational(p.n, p.min_degree) : Rational::infinity();
    p.psi_average = m > 0 ? Rational(p.n) / p.avg_degree : Rational::infinity();
    return p;
}

InducedSubgraph remove_vertices(const Graph& g, const std::vector<int>& removed) {
    int n = g.vertex_count();
    std::vector<char> gone(n, 0);
    for (int v : removed) {
        if (v < 0 || v >= n)
            throw InputError("remove_vertices: unknown vertex id " + std::to_string(v));
        gone[v] = 1;
    }
    InducedSubgraph out;
    out.original_to_new.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (!gone[v]) {
            out.original_to_new[v] = static_cast<int>(out.kept.size());
            out.kept.push_back(v);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        if (gone[u]) continue;
        for (int v : g.neighbors(u))
            if (u < v && !gone[v])
                edges.emplace_back(out.original_to_new[u], out.original_to_new[v]);
    }
    out.graph = Graph::from_edges(static_cast<int>(out.kept.size()), edges);
    return out;
}

Contraction contract_sets(const Graph& g, const std::vector<std::vector<int>>& parts) {
    int n = g.vertex_count();
    std::vector<int> part_of(n, -1);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int v : parts[i]) {
            if (v < 0 || v >= n)
                throw InputError("contract_sets: unknown vertex id " + std::to_string(v));
            if (part_of[v] != -1)
                throw InputError("contract_sets: overlapping parts at vertex " + std::to_string(v));
            part_of[v] = static_cast<int>(i);
        }
    }

    // Super-vertices: the given parts plus singletons, ordered by smallest member.
    std::vector<std::vector<int>> members;
    for (const auto& part : parts) {
        if (part.empty()) throw InputError("contract_sets: empty part");
        auto sorted = part;
        std::sort(sorted.begin(), sorted.end());
        members.push_back(std::move(sorted));
    }
    for (int v = 0; v < n; ++v)
        if (part_of[v] == -1) members.push_back({v});
    std::sort(members.begin(), members.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    Contraction out;
    out.map.super_members = members;
    out.map.original_to_super.assign(n, -1);
    for (std::size_t s = 0; s < members.size(); ++s)
        for (int v : members[s]) out.map.original_to_super[v] = static_cast<int>(s);

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (u >= v) continue;
            int su = out.map.original_to_super[u];
            int sv = out.map.original_to_super[v];
            if (su != sv) edges.emplace_back(su, sv);
        }
    out.graph = Graph::from_edges_merged(static_cast<int>(members.size()), edges);
    return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (int v : g.neighbors(u))
                if (comp[v] == -1) {
                    comp[v] = id;
                    stack.push_back(v);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    return connected_components(g).size() == 1;
}

}  // namespace subdense
