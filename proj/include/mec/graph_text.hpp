#ifndef MEC_GRAPH_TEXT_HPP
#define MEC_GRAPH_TEXT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "mec/compelled.hpp"
#include "mec/dag.hpp"

namespace mec {

// Graph text format, one directive per line:
//   node <name>        optional, fixes index order
//   <name> -> <name>   directed edge
//   <name> -- <name>   undirected pair (PDAG output only)
// '#' starts a comment; blank lines are ignored. Names not declared with a
// `node` line get indices by first mention.
Dag parse_graph_text(std::istream& in, const std::string& filename);
Dag parse_graph_file(const std::string& path);

std::string write_graph_text(const Dag& g);
std::string write_pdag_text(const Pdag& p);

// Rebuilds g with node indices permuted so that names line up with `target`.
// Requires g to be named with exactly the target name set.
Dag align_to_names(const std::vector<std::string>& target, const Dag& g);

}  // namespace mec

#endif  // MEC_GRAPH_TEXT_HPP
