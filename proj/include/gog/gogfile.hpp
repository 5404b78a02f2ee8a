#pragma once

#include <iosfwd>
#include <string>

#include "gog/graph.hpp"

namespace gog {

// Text format for graph-of-groups inputs, one directive per line:
//
//   # comment
//   custom <name> omega=<p/q|undef> rg=<p/q> b1l2=<p/q> vb=<p/q>
//          vc_eq_rg=<0|1> norm=<int|unbounded> hyp=<0|1>   (one line)
//   vertex <id> <descriptor>
//   edge <id> <u> <v> <order>
//
// Descriptors are finite:<n>, finite:<catalog-name>, surface:<g>, free:<r>,
// nilpotent, polycyclic, or custom:<name> where the name was declared by an
// earlier custom line.  Errors carry 1-based line numbers.
GraphOfGroups parse_gog(std::istream& in);
GraphOfGroups parse_gog_string(const std::string& text);
GraphOfGroups load_gog_file(const std::string& path);

// Emits custom declarations, then vertices, then edges.  Catalog-named
// finite vertices come back out as finite:<n>, so serialize-parse
// round-trips to an equal graph rather than an identical byte stream.
std::string serialize_gog(const GraphOfGroups& g);

}  // namespace gog
