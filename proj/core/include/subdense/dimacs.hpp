#pragma once

#include <iosfwd>
#include <string>

#include "subdense/graph.hpp"

namespace subdense {

// DIMACS edge format: `p edge <n> <m>` header, `e <u> <v>` lines with 1-based
// ids, `c ...` comments. The reader rejects self-loops and duplicate edges.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::string& path);

void write_dimacs(std::ostream& out, const Graph& g);
void write_dimacs_file(const std::string& path, const Graph& g);

// Canonical JSON form used by golden tests:
// {"n": <int>, "edges": [[u,v], ...]} with u < v, sorted lexicographically.
std::string graph_to_canonical_json(const Graph& g);

}  // namespace subdense
