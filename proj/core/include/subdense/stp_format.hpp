#pragma once

#include <iosfwd>
#include <string>

#include "subdense/steiner.hpp"

namespace subdense {

// SteinLib STP subset: `SECTION Graph` with `Nodes n` / `Edges m` / `E u v 1`
// lines (unit weights only), `SECTION Terminals` with `Terminals k` / `T v`
// lines, 1-based ids. The reader tolerates the magic header, comment
// sections, and END/EOF markers; the writer emits them.
SteinerInstance read_stp(std::istream& in);
SteinerInstance read_stp_file(const std::string& path);

void write_stp(std::ostream& out, const SteinerInstance& inst, const std::string& name = "");
void write_stp_file(const std::string& path, const SteinerInstance& inst,
                    const std::string& name = "");

}  // namespace subdense
