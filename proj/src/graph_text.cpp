#include "mec/graph_text.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace mec {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string tok;
  while (stream >> tok) tokens.push_back(tok);
  return tokens;
}

bool valid_name(const std::string& name) {
  return name != "node" && name != "->" && name != "--" &&
         name.find('#') == std::string::npos;
}

}  // namespace

Dag parse_graph_text(std::istream& in, const std::string& filename) {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index_of;
  std::vector<Edge> edges;

  auto resolve = [&](const std::string& name, int line_no) {
    if (!valid_name(name))
      throw ParseError(filename, line_no, 0, "'" + name + "' is not a valid node name");
    auto it = index_of.find(name);
    if (it != index_of.end()) return it->second;
    int idx = static_cast<int>(names.size());
    names.push_back(name);
    index_of.emplace(name, idx);
    return idx;
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "node") {
      if (tokens.size() != 2)
        throw ParseError(filename, line_no, 0, "expected 'node <name>'");
      if (index_of.count(tokens[1]))
        throw ParseError(filename, line_no, 0, "node '" + tokens[1] + "' declared twice");
      resolve(tokens[1], line_no);
    } else if (tokens.size() == 3 && tokens[1] == "->") {
      edges.push_back(Edge{resolve(tokens[0], line_no), resolve(tokens[2], line_no)});
    } else {
      throw ParseError(filename, line_no, 0,
                       "expected 'node <name>' or '<name> -> <name>'");
    }
  }

  int node_count = static_cast<int>(names.size());
  try {
    return Dag::from_edges(node_count, edges, std::move(names));
  } catch (const SelfLoopError& e) {
    throw ParseError(filename, line_no, 0, e.what());
  }
}

Dag parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgumentError("cannot open graph file: " + path);
  return parse_graph_text(in, path);
}

std::string write_graph_text(const Dag& g) {
  std::ostringstream out;
  for (int v = 0; v < g.node_count(); ++v) out << "node " << g.name_of(v) << "\n";
  for (const Edge& e : g.edges())
    out << g.name_of(e.tail) << " -> " << g.name_of(e.head) << "\n";
  return out.str();
}

std::string write_pdag_text(const Pdag& p) {
  auto name_of = [&](int v) {
    return p.has_names() ? p.names()[v] : std::to_string(v);
  };
  int n = static_cast<int>(p.names().size());
  for (const PdagEdge& e : p.edges()) n = std::max({n, e.tail + 1, e.head + 1});

  std::ostringstream out;
  for (int v = 0; v < n; ++v) out << "node " << name_of(v) << "\n";
  for (const PdagEdge& e : p.edges())
    out << name_of(e.tail) << (e.directed ? " -> " : " -- ") << name_of(e.head) << "\n";
  return out.str();
}

Dag align_to_names(const std::vector<std::string>& target, const Dag& g) {
  if (!g.has_names()) throw InvalidArgumentError("graph has no node names to align by");
  if (static_cast<int>(target.size()) != g.node_count())
    throw NodeCountMismatchError("node sets differ: " + std::to_string(target.size()) +
                                 " names vs " + std::to_string(g.node_count()) + " nodes");

  std::unordered_map<std::string, int> target_index;
  for (std::size_t i = 0; i < target.size(); ++i) target_index.emplace(target[i], i);

  std::vector<int> remap(g.node_count());
  for (int v = 0; v < g.node_count(); ++v) {
    auto it = target_index.find(g.names()[v]);
    if (it == target_index.end())
      throw InvalidArgumentError("node '" + g.names()[v] + "' not present in the reference set");
    remap[v] = it->second;
  }

  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e = Edge{remap[e.tail], remap[e.head]};
  return Dag::from_edges(g.node_count(), edges, target);
}

}  // namespace mec
