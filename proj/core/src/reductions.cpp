#include "subdense/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "subdense/errors.hpp"
#include "subdense/vc.hpp"

namespace subdense {

std::pair<SteinerInstance, ReductionCertificate> vc_to_steiner(const Graph& g) {
    int n = g.vertex_count();
    long long m = g.edge_count();
    if (m == 0) throw InputError("vc_to_steiner: source graph has no edges");
    if (n > 2000)
        throw BudgetError("vc_to_steiner: source exceeds the 2000-vertex guard");

    auto source_edges = g.edges();
    std::vector<std::pair<int, int>> out_edges;
    // clique on the source vertices
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out_edges.emplace_back(u, v);
    // one vertex per source edge, joined to both endpoints
    std::vector<int> terminals;
    for (std::size_t i = 0; i < source_edges.size(); ++i) {
        int ve = n + static_cast<int>(i);
        out_edges.emplace_back(source_edges[i].first, ve);
        out_edges.emplace_back(source_edges[i].second, ve);
        terminals.push_back(ve);
    }

    ReductionCertificate cert;
    cert.kind = ReductionKind::VcToSteiner;
    cert.cost_identity = "smt = |E| + vc_opt - 1 (sources with >= 2 edges)";
    cert.source_graph = g;
    cert.edge_of_terminal = source_edges;

    SteinerInstance inst = SteinerInstance::make(
        Graph::from_edges(n + static_cast<int>(m), out_edges), std::move(terminals));
    return {std::move(inst), std::move(cert)};
}

std::vector<int> steiner_to_vc_solution(const SteinerTreeSolution& tree,
                                        const ReductionCertificate& cert) {
    if (cert.kind != ReductionKind::VcToSteiner)
        throw InputError("steiner_to_vc_solution: certificate kind mismatch");
    int n = cert.source_graph.vertex_count();
    int m = static_cast<int>(cert.edge_of_terminal.size());
    for (int i = 0; i < m; ++i)
        if (!std::binary_search(tree.spans.begin(), tree.spans.end(), n + i))
            throw InputError("steiner_to_vc_solution: tree misses terminal " +
                             std::to_string(n + i));

    std::vector<char> in(n, 0);
    std::vector<int> cover;
    for (int v : tree.spans)
        if (v < n) {
            in[v] = 1;
            cover.push_back(v);
        }
    // a feasible tree reaches each edge vertex through one of its endpoints,
    // so this augmentation only fires on degenerate single-terminal trees
    for (auto [u, w] : cert.edge_of_terminal)
        if (!in[u] && !in[w]) {
            in[std::min(u, w)] = 1;
            cover.push_back(std::min(u, w));
        }
    return make_vc_solution(cert.source_graph, std::move(cover)).cover;
}

namespace {

// smallest k >= 1 with k^p >= m^(q-p), i.e. ceil(m^((q-p)/p)) computed
// exactly for delta = p/q; avoids float-boundary misrounding
long long exact_ceil_power(long long m, long long p, long long q) {
    long long e = q - p;  // >= 1 since delta < 1
    if (m <= 1) return 1;
    long double est =
        std::pow(static_cast<long double>(m), static_cast<long double>(e) / p);
    if (est > 1e12L) throw BudgetError("densify: replica count k overflows the guard");

    const __int128 sat = static_cast<__int128>(1) << 100;
    auto sat_pow = [&](long long base, long long exp) {
        __int128 acc = 1;
        for (long long i = 0; i < exp; ++i) {
            acc *= base;
            if (acc >= sat) return sat;
        }
        return acc;
    };
    auto at_least = [&](long long k) {
        __int128 lhs = sat_pow(k, p);
        __int128 rhs = sat_pow(m, e);
        if (lhs == sat && rhs == sat)
            return p * std::log(static_cast<long double>(k)) >=
                   e * std::log(static_cast<long double>(m));
        return lhs >= rhs;
    };
    long long k = std::max<long long>(1, static_cast<long long>(est) - 2);
    while (!at_least(k)) ++k;
    while (k > 1 && at_least(k - 1)) --k;
    return k;
}

}  // namespace

std::pair<SteinerInstance, ReductionCertificate> densify(const SteinerInstance& inst,
                                                         const Rational& delta) {
    if (!(delta > Rational(0)) || !(delta < Rational(1)))
        throw InputError("densify: delta must lie in (0,1)");
    std::vector<int> nonterms = inst.nonterminals();
    long long m = static_cast<long long>(nonterms.size());
    if (m < 1) throw InputError("densify: instance has no nonterminals");
    for (int t : inst.terminals) {
        bool ok = false;
        for (int u : inst.graph.neighbors(t))
            if (!inst.is_terminal(u)) {
                ok = true;
                break;
            }
        if (!ok)
            throw InputError("densify: terminal " + std::to_string(t) +
                             " has no nonterminal neighbor; output would disconnect it");
    }

    long long k = exact_ceil_power(m, delta.num, delta.den);
    long long replicas = k * m;
    long long out_n = static_cast<long long>(inst.terminals.size()) + replicas;
    if (replicas > 100000 || replicas * (replicas - 1) / 2 > 4000000)
        throw BudgetError("densify: k = " + std::to_string(k) +
                          " makes the replica clique exceed the size guard");

    ReductionCertificate cert;
    cert.kind = ReductionKind::Densify;
    cert.cost_identity = "opt(densified) = opt(source)";
    cert.source_instance = inst;
    cert.replica_count = k;
    cert.delta = delta;

    int tcount = static_cast<int>(inst.terminals.size());
    cert.terminal_of_output.assign(tcount, -1);
    std::vector<int> out_id_of_source(inst.graph.vertex_count(), -1);
    for (int i = 0; i < tcount; ++i) {
        cert.terminal_of_output[i] = inst.terminals[i];
        out_id_of_source[inst.terminals[i]] = i;
    }
    cert.owner_of_output.assign(out_n, -1);
    auto replica_base = [&](int xi) { return tcount + static_cast<long long>(xi) * k; };
    for (std::size_t xi = 0; xi < nonterms.size(); ++xi)
        for (long long j = 0; j < k; ++j)
            cert.owner_of_output[replica_base(static_cast<int>(xi)) + j] = nonterms[xi];

    std::vector<std::pair<int, int>> edges;
    // terminal-to-replica edges mirror the source terminal-nonterminal edges
    for (std::size_t xi = 0; xi < nonterms.size(); ++xi) {
        int x = nonterms[xi];
        for (int s : inst.graph.neighbors(x)) {
            if (!inst.is_terminal(s)) continue;
            int s_out = out_id_of_source[s];
            for (long long j = 0; j < k; ++j)
                edges.emplace_back(s_out, static_cast<int>(replica_base(static_cast<int>(xi)) + j));
        }
    }
    // clique over all replicas
    for (long long a = 0; a < replicas; ++a)
        for (long long b = a + 1; b < replicas; ++b)
            edges.emplace_back(static_cast<int>(tcount + a), static_cast<int>(tcount + b));

    std::vector<int> out_terminals(tcount);
    for (int i = 0; i < tcount; ++i) out_terminals[i] = i;
    SteinerInstance out = SteinerInstance::make(
        Graph::from_edges(static_cast<int>(out_n), edges), std::move(out_terminals));
    return {std::move(out), std::move(cert)};
}

SteinerTreeSolution densified_to_source_solution(const SteinerTreeSolution& tree,
                                                 const ReductionCertificate& cert) {
    if (cert.kind != ReductionKind::Densify)
        throw InputError("densified_to_source_solution: certificate kind mismatch");
    const SteinerInstance& source = cert.source_instance;
    int tcount = static_cast<int>(cert.terminal_of_output.size());

    auto map_back = [&](int v) {
        if (v < tcount) return cert.terminal_of_output[v];
        if (v >= static_cast<int>(cert.owner_of_output.size()) || cert.owner_of_output[v] < 0)
            throw InputError("densified_to_source_solution: vertex " + std::to_string(v) +
                             " is not part of the densified instance");
        return cert.owner_of_output[v];
    };

    // identify replicas with their owners; loops vanish, multi-edges merge
    std::vector<std::pair<int, int>> mapped;
    for (auto [a, b] : tree.tree_edges) {
        int x = map_back(a);
        int y = map_back(b);
        if (x == y) continue;
        if (!source.graph.has_edge(x, y))
            throw InputError(
                "densified_to_source_solution: mapped edge (" + std::to_string(x) + "," +
                std::to_string(y) +
                ") is missing in the source; the mapping is cost-preserving only when the "
                "source nonterminals are pairwise adjacent");
        mapped.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(mapped.begin(), mapped.end());
    mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());

    // the mapped subgraph is connected and spans every source terminal; trim
    // to a spanning tree and drop nonterminal leaves
    std::vector<std::vector<int>> adj(source.graph.vertex_count());
    for (auto [u, v] : mapped) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> parent(source.graph.vertex_count(), -2);
    int start = source.terminals.front();
    std::vector<int> queue{start};
    parent[start] = -1;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v : adj[u])
            if (parent[v] == -2) {
                parent[v] = u;
                queue.push_back(v);
                edges.emplace_back(std::min(u, v), std::max(u, v));
            }
    }
    for (;;) {
        std::vector<int> deg(source.graph.vertex_count(), 0);
        for (auto [u, v] : edges) {
            ++deg[u];
            ++deg[v];
        }
        std::size_t before = edges.size();
        std::erase_if(edges, [&](const std::pair<int, int>& e) {
            auto leaf = [&](int v) { return deg[v] == 1 && !source.is_terminal(v); };
            return leaf(e.first) || leaf(e.second);
        });
        if (edges.size() == before) break;
    }
    return make_steiner_solution(source, std::move(edges));
}

std::string certificate_to_json(const ReductionCertificate& cert) {
    std::ostringstream out;
    out << "{";
    out << "\"kind\": \""
        << (cert.kind == ReductionKind::VcToSteiner ? "vc_to_steiner" : "densify") << "\", ";
    out << "\"cost_identity\": \"" << cert.cost_identity << "\", ";
    // context only, never computed here: fed with the Berman-Karpinski
    // degree-4 family (104n vertices, cover gap (54+eps)n vs (55-eps)n),
    // the composed pipeline realizes the 263/262-eps hardness threshold
    out << "\"hardness_context\": \"composed with bounded-degree-4 sources of the "
           "Berman-Karpinski family (104n vertices, cover gap (54+eps)n vs (55-eps)n), "
           "this reduction realizes the 263/262-eps inapproximability threshold\"";
    if (cert.kind == ReductionKind::VcToSteiner) {
        out << ", \"source_n\": " << cert.source_graph.vertex_count();
        out << ", \"source_m\": " << cert.source_graph.edge_count();
        out << ", \"terminal_edges\": [";
        for (std::size_t i = 0; i < cert.edge_of_terminal.size(); ++i) {
            if (i) out << ", ";
            out << "[" << cert.edge_of_terminal[i].first << ", "
                << cert.edge_of_terminal[i].second << "]";
        }
        out << "]";
    } else {
        out << ", \"k\": " << cert.replica_count;
        out << ", \"delta\": \"" << cert.delta.str() << "\"";
        out << ", \"terminal_of_output\": [";
        for (std::size_t i = 0; i < cert.terminal_of_output.size(); ++i) {
            if (i) out << ", ";
            out << cert.terminal_of_output[i];
        }
        out << "], \"owner_of_output\": [";
        for (std::size_t i = 0; i < cert.owner_of_output.size(); ++i) {
            if (i) out << ", ";
            out << cert.owner_of_output[i];
        }
        out << "]";
    }
    out << "}";
    return out.str();
}

}  // namespace subdense
