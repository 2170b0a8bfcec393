#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "subdense/graph.hpp"
#include "subdense/rational.hpp"

namespace subdense {

// Unit-weight Steiner tree instance: connected graph plus nonempty terminal set.
struct SteinerInstance {
    Graph graph;
    std::vector<int> terminals;  // sorted, deduplicated

    static SteinerInstance make(Graph graph, std::vector<int> terminals);

    bool is_terminal(int v) const;
    std::vector<int> nonterminals() const;
};

struct SteinerTreeSolution {
    std::vector<std::pair<int, int>> tree_edges;  // u < v, sorted
    int cost = 0;                                 // = |tree_edges|
    std::vector<int> spans;                       // sorted vertex set of the tree
};

// Validates tree-ness (acyclic + connected) and terminal coverage.
SteinerTreeSolution make_steiner_solution(const SteinerInstance& inst,
                                          std::vector<std::pair<int, int>> tree_edges);

// Tightest psi for which every terminal has >= |V\S|/psi nonterminal
// neighbors. Infinite when some terminal sees no nonterminal at all.
Rational density_psi_st(const SteinerInstance& inst);

// Exact Steiner tree via the Dreyfus-Wagner subset DP. Deterministic
// reconstruction (smallest-id preferences). Refuses |S| above the cap.
SteinerTreeSolution dreyfus_wagner(const SteinerInstance& inst, int terminal_cap = 18);

// Greedy star center: the unused nonterminal with the most neighbors in the
// current terminal set; ties to the smallest id. Errors when no candidate.
int star_pick(const Graph& g, const std::vector<int>& current_terminals,
              const std::vector<int>& used_centers);

struct MdstpParams {
    Rational delta;         // > 0
    Rational psi;           // >= 1
    long long stop_threshold = 0;  // ceil(max{2/delta, 2} * psi)
    int dw_cap = 18;
};

// Builds params; when psi is absent it defaults to density_psi_st(inst),
// the tightest value the instance supports.
MdstpParams mdstp_params(Rational delta, Rational psi, int dw_cap = 18);

struct StarRecord {
    int center = 0;               // original vertex id
    int terminal_members = 0;     // |S(v)| - 1
};

struct MdstpResult {
    SteinerTreeSolution tree;
    std::optional<Rational> certified_bound;  // 1 + delta, or 1 for the pure-exact path;
                                              // absent when density could not be certified
    std::vector<StarRecord> stars;            // phase-1 extraction order
    int extracted_count = 0;                  // |N|
    int max_super_height = 0;
    bool density_certified = false;
};

// Star-extraction scheme: contract greedy stars until the terminal set is
// below the stop threshold, solve the remainder exactly, expand the stars.
MdstpResult mdstp(const SteinerInstance& inst, const MdstpParams& params);
MdstpResult mdstp(const SteinerInstance& inst, Rational delta,
                  std::optional<Rational> psi = std::nullopt, int dw_cap = 18);

}  // namespace subdense
