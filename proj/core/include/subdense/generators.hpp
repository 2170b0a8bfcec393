#pragma once

#include <cstdint>
#include <vector>

#include "subdense/graph.hpp"
#include "subdense/rational.hpp"
#include "subdense/set_cover.hpp"
#include "subdense/steiner.hpp"

namespace subdense {

// Knobs for the psi-dense instance families. Every generator validates its
// own density claim post-generation and retries with derived reseeds.
struct GenSpec {
    int n = 0;
    Rational psi = Rational(2);
    std::uint64_t seed = 0;
    Rational planted_fraction = Rational(1, 2);  // VC/CVC: planted cover size rho*n
    int set_count = 0;                           // SC: m
    int terminal_count = 0;                      // STP: |S|
};

struct PlantedGraph {
    Graph graph;
    std::vector<int> planted_cover;  // a (not necessarily optimal) vertex cover
};

// Connected graph with min degree >= ceil(n/psi), max degree <= n/2, and all
// edges touching the planted cover.
PlantedGraph gen_subdense_graph(const GenSpec& spec);

// Every element lands in ceil(m/psi) uniformly chosen sets.
SetCoverInstance gen_dense_setcover(const GenSpec& spec);

// Every terminal wired to ceil(|V\S|/psi) random nonterminals over a sparse
// connected nonterminal backbone.
SteinerInstance gen_dense_steiner(const GenSpec& spec);

}  // namespace subdense
