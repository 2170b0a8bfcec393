#include "subdense/dimacs.hpp"

#include <fstream>
#include <sstream>

#include "subdense/errors.hpp"

namespace subdense {

Graph read_dimacs(std::istream& in) {
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0)
                throw InputError("dimacs line " + std::to_string(lineno) +
                                 ": duplicate problem line");
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "edge")
                throw InputError("dimacs line " + std::to_string(lineno) +
                                 ": expected `p edge <n> <m>`");
            if (n < 0 || m < 0)
                throw InputError("dimacs line " + std::to_string(lineno) + ": negative size");
            continue;
        }
        if (tag == "e") {
            if (n < 0)
                throw InputError("dimacs line " + std::to_string(lineno) +
                                 ": edge before problem line");
            int u, v;
            if (!(ls >> u >> v))
                throw InputError("dimacs line " + std::to_string(lineno) + ": malformed edge");
            if (u < 1 || u > n || v < 1 || v > n)
                throw InputError("dimacs line " + std::to_string(lineno) +
                                 ": endpoint out of range");
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        throw InputError("dimacs line " + std::to_string(lineno) + ": unknown record `" +
                         tag + "`");
    }
    if (n < 0) throw InputError("dimacs: missing problem line");
    if (static_cast<long long>(edges.size()) != m)
        throw InputError("dimacs: header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    // from_edges rejects self-loops and one orientation of duplicates; catch
    // the reversed duplicate explicitly so both spellings are refused.
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    return Graph::from_edges(n, edges);
}

Graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

void write_dimacs_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open " + path + " for writing");
    write_dimacs(out, g);
}

std::string graph_to_canonical_json(const Graph& g) {
    std::ostringstream out;
    out << "{\"n\": " << g.vertex_count() << ", \"edges\": [";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (!first) out << ", ";
        first = false;
        out << "[" << u << ", " << v << "]";
    }
    out << "]}";
    return out.str();
}

}  // namespace subdense
