#pragma once

#include <utility>
#include <vector>

#include "subdense/rational.hpp"

namespace subdense {

// Simple undirected graph on dense vertex ids 0..n-1. Immutable after
// construction; every operation below returns a fresh graph plus the id
// bookkeeping needed to lift solutions back to the original labels.
class Graph {
public:
    Graph() = default;

    // Strict construction: rejects self-loops, duplicate edges, bad ids.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    // Merging construction: drops self-loops, collapses parallel edges.
    static Graph from_edges_merged(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    // All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

struct DensityProfile {
    int n = 0;
    Rational avg_degree;      // 2m/n
    int max_degree = 0;
    int min_degree = 0;
    Rational psi_everywhere;  // n / min_degree, inf when min_degree == 0
    Rational psi_average;     // n / avg_degree, inf when edgeless
};

DensityProfile density_profile(const Graph& g);

// Result of taking the induced subgraph on V \ removed.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> kept;             // new id -> original id
    std::vector<int> original_to_new;  // original id -> new id, -1 if removed
};

InducedSubgraph remove_vertices(const Graph& g, const std::vector<int>& removed);

struct ContractionMap {
    std::vector<int> original_to_super;
    std::vector<std::vector<int>> super_members;  // sorted member lists
};

struct Contraction {
    Graph graph;
    ContractionMap map;
};

// Each part collapses into one super-vertex adjacent to the union of its
// members' outside neighborhoods. Vertices in no part become singleton
// super-vertices. Super ids are ordered by smallest original member.
Contraction contract_sets(const Graph& g, const std::vector<std::vector<int>>& parts);

// Components ordered by smallest member; members sorted ascending.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace subdense
