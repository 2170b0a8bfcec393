#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "subdense/errors.hpp"
#include "subdense/steiner.hpp"

namespace subdense {

MdstpParams mdstp_params(Rational delta, Rational psi, int dw_cap) {
    if (!(delta > Rational(0))) throw InputError("mdstp: delta must be positive");
    if (!(psi >= Rational(1))) throw InputError("mdstp: psi must be at least 1");
    MdstpParams p;
    p.delta = delta;
    p.psi = psi;
    Rational factor = Rational(2) / delta;
    if (factor < Rational(2)) factor = Rational(2);
    p.stop_threshold = (factor * psi).ceil();
    p.dw_cap = dw_cap;
    return p;
}

namespace {

// Working state of the contraction phase. Vertices of the working graph map
// back to sets of original vertices; terminals may be super-vertices.
struct WorkState {
    Graph graph;
    std::vector<char> is_terminal;
    std::vector<std::vector<int>> originals;  // sorted original members
    std::vector<int> height;                  // contraction-tree height, terminals only

    int terminal_count() const {
        int c = 0;
        for (char t : is_terminal) c += t;
        return c;
    }

    std::vector<int> terminals() const {
        std::vector<int> out;
        for (int v = 0; v < graph.vertex_count(); ++v)
            if (is_terminal[v]) out.push_back(v);
        return out;
    }

    int nonterminal_neighbor_count(int v) const {
        int c = 0;
        for (int u : graph.neighbors(v))
            if (!is_terminal[u]) ++c;
        return c;
    }
};

// Smallest original edge crossing two member groups, as (min, max).
std::pair<int, int> representative_edge(const Graph& original, const std::vector<int>& a,
                                        const std::vector<int>& b) {
    std::pair<int, int> best{-1, -1};
    for (int x : a)
        for (int y : b) {
            if (!original.has_edge(x, y)) continue;
            auto cand = std::minmax(x, y);
            std::pair<int, int> e{cand.first, cand.second};
            if (best.first < 0 || e < best) best = e;
        }
    if (best.first < 0) throw std::logic_error("contracted edge without original witness");
    return best;
}

}  // namespace

MdstpResult mdstp(const SteinerInstance& inst, const MdstpParams& params) {
    const Graph& original = inst.graph;
    const int nonterm_total =
        original.vertex_count() - static_cast<int>(inst.terminals.size());

    MdstpResult result;
    result.density_certified = true;
    if (nonterm_total >= 1) {
        Rational actual = density_psi_st(inst);
        result.density_certified = actual <= params.psi;
    }

    WorkState ws;
    ws.graph = original;
    ws.is_terminal.assign(original.vertex_count(), 0);
    for (int t : inst.terminals) ws.is_terminal[t] = 1;
    ws.originals.resize(original.vertex_count());
    for (int v = 0; v < original.vertex_count(); ++v) ws.originals[v] = {v};
    ws.height.assign(original.vertex_count(), 0);

    const Rational min_density_degree = nonterm_total >= 1
                                            ? Rational(nonterm_total) / params.psi
                                            : Rational(0);

    std::vector<std::pair<int, int>> star_edges;
    int iterations = 0;

    auto density_violation = [&](const char* what) {
        // distinguish a genuine density violation from an internal bug
        Rational actual = density_psi_st(inst);
        if (actual <= params.psi)
            throw std::logic_error(std::string("mdstp: ") + what +
                                   " violated on a density-certified instance");
        result.density_certified = false;
    };

    while (ws.terminal_count() > params.stop_threshold) {
        std::vector<int> terms = ws.terminals();

        int center = -1;
        try {
            center = star_pick(ws.graph, terms, {});
        } catch (const InputError&) {
            break;  // no nonterminal left; hand the remainder to the exact phase
        }

        std::vector<int> members;
        for (int u : ws.graph.neighbors(center))
            if (ws.is_terminal[u]) members.push_back(u);
        if (members.empty()) break;  // density-starved pick, exit to exact phase

        if (result.density_certified) {
            Rational pick(static_cast<long long>(members.size()));
            Rational required = Rational(ws.terminal_count()) / (Rational(2) * params.psi);
            if (pick < required) density_violation("star extraction lower bound");
        }

        // record the star in original ids before the graph is rewritten
        int center_orig = ws.originals[center].front();
        for (int t : members)
            star_edges.push_back(
                representative_edge(original, ws.originals[center], ws.originals[t]));
        result.stars.push_back({center_orig, static_cast<int>(members.size())});

        int new_height = 0;
        for (int t : members) new_height = std::max(new_height, ws.height[t]);
        new_height += 1;
        result.max_super_height = std::max(result.max_super_height, new_height);

        std::vector<int> part = members;
        part.push_back(center);
        Contraction c = contract_sets(ws.graph, {part});

        WorkState next;
        next.graph = std::move(c.graph);
        int nn = next.graph.vertex_count();
        next.is_terminal.assign(nn, 0);
        next.originals.resize(nn);
        next.height.assign(nn, 0);
        for (int s = 0; s < nn; ++s) {
            const auto& group = c.map.super_members[s];
            if (group.size() == 1) {
                int old = group.front();
                next.is_terminal[s] = ws.is_terminal[old];
                next.originals[s] = ws.originals[old];
                next.height[s] = ws.height[old];
            } else {
                // the contracted star becomes one super-terminal
                next.is_terminal[s] = 1;
                std::vector<int> merged;
                for (int old : group)
                    merged.insert(merged.end(), ws.originals[old].begin(),
                                  ws.originals[old].end());
                std::sort(merged.begin(), merged.end());
                next.originals[s] = std::move(merged);
                next.height[s] = new_height;
            }
        }
        ws = std::move(next);
        ++iterations;

        if (result.density_certified && nonterm_total >= 1) {
            // every surviving terminal loses at most one nonterminal neighbor
            // per iteration (exactly one nonterminal is absorbed each round)
            long long floor_bound = min_density_degree.ceil() - iterations;
            for (int v = 0; v < ws.graph.vertex_count(); ++v) {
                if (!ws.is_terminal[v]) continue;
                if (ws.nonterminal_neighbor_count(v) < floor_bound)
                    density_violation("super-terminal neighbor deficit bound");
            }
        }
    }

    result.extracted_count = iterations;

    if (result.density_certified && iterations > 0) {
        // extraction-count bound: |N| <= 2 psi ln(|S|/s) + 1
        double limit = 2.0 * params.psi.to_double() *
                           std::log(static_cast<double>(inst.terminals.size()) /
                                    static_cast<double>(params.stop_threshold)) +
                       1.0;
        if (static_cast<double>(iterations) > limit)
            throw std::logic_error("mdstp: phase-1 iteration count exceeds its bound");
    }

    std::vector<int> final_terms = ws.terminals();
    if (static_cast<int>(final_terms.size()) > params.dw_cap)
        throw BudgetError("mdstp: contracted instance keeps " +
                          std::to_string(final_terms.size()) +
                          " terminals; requires a Dreyfus-Wagner cap of at least " +
                          std::to_string(final_terms.size()) + " (configured " +
                          std::to_string(params.dw_cap) + ")");

    SteinerInstance reduced = SteinerInstance::make(ws.graph, final_terms);
    SteinerTreeSolution exact = dreyfus_wagner(reduced, params.dw_cap);

    std::vector<std::pair<int, int>> edges = star_edges;
    for (auto [a, b] : exact.tree_edges)
        edges.push_back(representative_edge(original, ws.originals[a], ws.originals[b]));

    result.tree = make_steiner_solution(inst, std::move(edges));
    if (iterations == 0)
        result.certified_bound = Rational(1);
    else if (result.density_certified)
        result.certified_bound = Rational(1) + params.delta;
    return result;
}

MdstpResult mdstp(const SteinerInstance& inst, Rational delta, std::optional<Rational> psi,
                  int dw_cap) {
    Rational resolved;
    if (psi) {
        resolved = *psi;
    } else {
        int nonterm = inst.graph.vertex_count() - static_cast<int>(inst.terminals.size());
        resolved = nonterm >= 1 ? density_psi_st(inst) : Rational(1);
        if (resolved.is_infinite())
            throw InputError("mdstp: instance is not psi-dense for any finite psi; pass one");
        if (resolved < Rational(1)) resolved = Rational(1);
    }
    return mdstp(inst, mdstp_params(delta, resolved, dw_cap));
}

}  // namespace subdense
