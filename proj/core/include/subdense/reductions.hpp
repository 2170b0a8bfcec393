#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subdense/graph.hpp"
#include "subdense/rational.hpp"
#include "subdense/steiner.hpp"

namespace subdense {

enum class ReductionKind { VcToSteiner, Densify };

// Forward correspondence plus the recorded cost relation; carries enough of
// the source instance to map solutions back and validate them.
struct ReductionCertificate {
    ReductionKind kind = ReductionKind::VcToSteiner;
    std::string cost_identity;

    // vc_to_steiner: source graph; terminal i corresponds to source edge i
    Graph source_graph;
    std::vector<std::pair<int, int>> edge_of_terminal;

    // densify
    SteinerInstance source_instance;
    long long replica_count = 0;  // k
    Rational delta;
    std::vector<int> terminal_of_output;  // output terminal -> source vertex
    std::vector<int> owner_of_output;     // output nonterminal -> source nonterminal, -1 otherwise
};

std::string certificate_to_json(const ReductionCertificate& cert);

// Edge-vertex gadget plus a clique on the source vertices; terminals are the
// edge vertices (degree exactly 2). For sources with at least two edges the
// optimal Steiner cost is |E| + vc_opt - 1. Refuses sources with more than
// 2000 vertices (the clique grows quadratically).
std::pair<SteinerInstance, ReductionCertificate> vc_to_steiner(const Graph& g);

// Nonterminal tree vertices, minimally augmented to a valid cover of the
// source graph.
std::vector<int> steiner_to_vc_solution(const SteinerTreeSolution& tree,
                                        const ReductionCertificate& cert);

// Replaces each source nonterminal x by k = ceil(m^((1-delta)/delta)) copies
// wired to x's terminal neighbors, with a clique over all copies. Optimal
// costs are preserved; every terminal with >= 2 source nonterminal neighbors
// ends with degree >= 2k.
std::pair<SteinerInstance, ReductionCertificate> densify(const SteinerInstance& inst,
                                                         const Rational& delta);

// Normalizes to at most one copy per replica group, then maps copies back to
// their owners. Output cost never exceeds the input cost.
SteinerTreeSolution densified_to_source_solution(const SteinerTreeSolution& tree,
                                                 const ReductionCertificate& cert);

}  // namespace subdense
