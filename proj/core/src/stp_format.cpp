#include "subdense/stp_format.hpp"

#include <fstream>
#include <sstream>

#include "subdense/errors.hpp"

namespace subdense {

SteinerInstance read_stp(std::istream& in) {
    int n = -1;
    long long m = -1, k = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> terminals;
    std::string line;
    int lineno = 0;
    std::string section;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        auto fail = [&](const std::string& why) {
            throw InputError("stp line " + std::to_string(lineno) + ": " + why);
        };
        if (tag == "SECTION") {
            ls >> section;
            continue;
        }
        if (tag == "END") {
            section.clear();
            continue;
        }
        if (tag == "EOF") break;
        if (section == "Comment" || tag.rfind("33D32945", 0) == 0) continue;
        if (section == "Graph") {
            if (tag == "Nodes") {
                if (!(ls >> n) || n < 0) fail("bad node count");
            } else if (tag == "Edges") {
                if (!(ls >> m) || m < 0) fail("bad edge count");
            } else if (tag == "E") {
                int u, v, w;
                if (!(ls >> u >> v >> w)) fail("malformed edge record");
                if (w != 1) fail("edge weight must be 1");
                if (n < 0 || u < 1 || u > n || v < 1 || v > n) fail("endpoint out of range");
                edges.emplace_back(std::min(u, v) - 1, std::max(u, v) - 1);
            } else {
                fail("unknown graph record `" + tag + "`");
            }
            continue;
        }
        if (section == "Terminals") {
            if (tag == "Terminals") {
                if (!(ls >> k) || k < 0) fail("bad terminal count");
            } else if (tag == "T") {
                int t;
                if (!(ls >> t)) fail("malformed terminal record");
                if (n < 0 || t < 1 || t > n) fail("terminal out of range");
                terminals.push_back(t - 1);
            } else {
                fail("unknown terminal record `" + tag + "`");
            }
            continue;
        }
        // ignore records of unhandled sections
    }

    if (n < 0) throw InputError("stp: missing `Nodes` record");
    if (m >= 0 && static_cast<long long>(edges.size()) != m)
        throw InputError("stp: header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    if (k >= 0 && static_cast<long long>(terminals.size()) != k)
        throw InputError("stp: header announces " + std::to_string(k) + " terminals, found " +
                         std::to_string(terminals.size()));
    return SteinerInstance::make(Graph::from_edges(n, edges), std::move(terminals));
}

SteinerInstance read_stp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_stp(in);
}

void write_stp(std::ostream& out, const SteinerInstance& inst, const std::string& name) {
    out << "33D32945 STP File, Version 1.0\n";
    if (!name.empty()) {
        out << "SECTION Comment\n";
        out << "Name \"" << name << "\"\n";
        out << "END\n\n";
    }
    out << "SECTION Graph\n";
    out << "Nodes " << inst.graph.vertex_count() << "\n";
    out << "Edges " << inst.graph.edge_count() << "\n";
    for (auto [u, v] : inst.graph.edges()) out << "E " << u + 1 << " " << v + 1 << " 1\n";
    out << "END\n\n";
    out << "SECTION Terminals\n";
    out << "Terminals " << inst.terminals.size() << "\n";
    for (int t : inst.terminals) out << "T " << t + 1 << "\n";
    out << "END\n\nEOF\n";
}

void write_stp_file(const std::string& path, const SteinerInstance& inst,
                    const std::string& name) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open " + path + " for writing");
    write_stp(out, inst, name);
}

}  // namespace subdense
