#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subdense/graph.hpp"
#include "subdense/rational.hpp"
#include "subdense/steiner.hpp"
#include "subdense/vc.hpp"

namespace subdense {

struct ConnectedCoverSolution {
    std::vector<int> cover;  // sorted
    int size = 0;
    std::optional<Rational> certified_ratio_bound;
    std::vector<std::pair<int, int>> connectivity_certificate;  // spanning tree of G[cover]
};

// Validates edge coverage and induced connectivity, and records a spanning
// tree of the induced cover as the connectivity certificate.
ConnectedCoverSolution make_cvc_solution(const Graph& g, std::vector<int> cover,
                                         std::optional<Rational> bound = std::nullopt);

// Maximal matching whose matched-vertex set induces a connected subgraph,
// grown greedily outward from `start`. Maximal within start's component.
std::vector<std::pair<int, int>> connected_maximal_matching(const Graph& g, int start);

// Pluggable quasi-bipartite Steiner subroutine.
struct QbSteinerSolver {
    std::string name;
    Rational guaranteed_ratio;
    std::function<SteinerTreeSolution(const SteinerInstance&)> solve;
};

// Metric-closure MST over the terminals, shortcut back to a subgraph tree;
// ratio 2 on quasi-bipartite inputs (validated). Instances with at most
// `exact_substitution_cap` terminals are handed to Dreyfus-Wagner instead;
// pass 0 to always run the MST heuristic.
QbSteinerSolver qb_mst_solver(int exact_substitution_cap = 16);

// Exact plug-in (ratio 1), refuses instances above the terminal cap.
QbSteinerSolver qb_exact_solver(int terminal_cap = 16);

// Subset Connected Vertex Cover: returns a connected cover containing s with
// certified ratio max{r_qb, 2/(1 + |s|/n)}.
ConnectedCoverSolution scvc(const Graph& g, const std::vector<int>& s,
                            const QbSteinerSolver& qb);

// Connected Vertex Cover pipeline: seeds scvc with the removed-set union of
// the recursive sampling solver. Certified ratio max{r_qb, 2/(1 + d/(2D))}
// when the max degree is at most n/2.
ConnectedCoverSolution cvc_subdense(const Graph& g, const IIParams& params,
                                    std::uint64_t seed, const QbSteinerSolver& qb,
                                    std::uint64_t* nodes_explored = nullptr);

}  // namespace subdense
