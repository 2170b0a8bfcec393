#pragma once

#include <vector>

#include "subdense/graph.hpp"
#include "subdense/set_cover.hpp"
#include "subdense/steiner.hpp"

namespace subdense {

// Exact optima at desk scale. Size guards refuse (BudgetError), never
// approximate: these values are the ground truth for every ratio test.

// Minimum vertex cover via branch and bound with a matching lower bound.
int brute_vc(const Graph& g);

// An explicit optimum cover (deterministic) for small graphs; the CLI's
// exact route for instances below the sampling-parameter floor.
std::vector<int> brute_vc_cover(const Graph& g);

// Minimum vertex cover that contains `required` and induces a connected
// subgraph; subset enumeration with pruning.
int brute_cvc(const Graph& g, const std::vector<int>& required = {});

// Minimum covering family size by scanning all 2^m families.
int brute_sc(const SetCoverInstance& inst);

// Minimum Steiner tree cost by enumerating nonterminal supersets of S.
int brute_steiner(const SteinerInstance& inst);

}  // namespace subdense
