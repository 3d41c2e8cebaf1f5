#include "mec/dag.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace mec {

namespace {

std::vector<std::vector<int>> children_of(int n, const std::vector<std::vector<int>>& parents) {
  std::vector<std::vector<int>> children(n);
  for (int head = 0; head < n; ++head) {
    for (int tail : parents[head]) children[tail].push_back(head);
  }
  return children;
}

// Kahn's algorithm with a min-heap over ready nodes. Returns the emitted
// prefix; shorter than n exactly when the edge set is cyclic.
std::vector<int> kahn_order(int n, const std::vector<std::vector<int>>& parents,
                            const std::vector<std::vector<int>>& children) {
  std::vector<int> indegree(n);
  for (int v = 0; v < n; ++v) indegree[v] = static_cast<int>(parents[v].size());

  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(v);

  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int c : children[v])
      if (--indegree[c] == 0) ready.push(c);
  }
  return order;
}

// Walk parent links inside the non-emitted subgraph until a node repeats.
std::vector<int> extract_witness_cycle(int n, const std::vector<std::vector<int>>& parents,
                                       const std::vector<int>& emitted) {
  std::vector<char> remaining(n, 1);
  for (int v : emitted) remaining[v] = 0;

  int start = 0;
  while (start < n && !remaining[start]) ++start;

  std::vector<int> chain;
  std::vector<int> pos(n, -1);
  int cur = start;
  while (pos[cur] < 0) {
    pos[cur] = static_cast<int>(chain.size());
    chain.push_back(cur);
    for (int p : parents[cur]) {
      if (remaining[p]) {
        cur = p;
        break;
      }
    }
  }
  // chain walks tail-ward; reverse the closing segment to get edge direction.
  std::vector<int> cycle(chain.begin() + pos[cur], chain.end());
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

std::string render_cycle(const std::vector<int>& cycle) {
  std::ostringstream out;
  for (int v : cycle) out << v << " -> ";
  out << cycle.front();
  return out.str();
}

}  // namespace

std::string to_string(Edge e) {
  return std::to_string(e.tail) + " -> " + std::to_string(e.head);
}

Dag Dag::from_edges(int node_count, const std::vector<Edge>& edges,
                    std::vector<std::string> names) {
  if (node_count < 0) throw InvalidArgumentError("node count must be non-negative");
  if (!names.empty() && static_cast<int>(names.size()) != node_count)
    throw InvalidArgumentError("name list length does not match node count");

  Dag g;
  g.node_count_ = node_count;
  g.parents_.resize(node_count);
  g.parent_sets_.resize(node_count);
  g.names_ = std::move(names);

  for (const Edge& e : edges) {
    if (e.tail < 0 || e.tail >= node_count || e.head < 0 || e.head >= node_count)
      throw InvalidArgumentError("edge " + to_string(e) + " out of range for " +
                                 std::to_string(node_count) + " nodes");
    if (e.tail == e.head) throw SelfLoopError("self loop at node " + std::to_string(e.tail));
    if (!g.parent_sets_[e.head].insert(e.tail).second)
      throw DuplicateEdgeError("duplicate edge " + to_string(e));
    g.parents_[e.head].push_back(e.tail);
    ++g.edge_count_;
  }
  for (auto& p : g.parents_) std::sort(p.begin(), p.end());

  auto children = children_of(node_count, g.parents_);
  auto order = kahn_order(node_count, g.parents_, children);
  if (static_cast<int>(order.size()) != node_count) {
    auto cycle = extract_witness_cycle(node_count, g.parents_, order);
    throw CycleError("edge set contains a directed cycle: " + render_cycle(cycle), cycle);
  }
  return g;
}

std::vector<Edge> Dag::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int head = 0; head < node_count_; ++head)
    for (int tail : parents_[head]) out.push_back(Edge{tail, head});
  std::sort(out.begin(), out.end());
  return out;
}

std::string Dag::name_of(int node) const {
  if (has_names()) return names_[node];
  return std::to_string(node);
}

std::vector<int> topological_sort(const Dag& g) {
  int n = g.node_count();
  std::vector<std::vector<int>> parents(n);
  for (int v = 0; v < n; ++v) parents[v] = g.parents(v);
  return kahn_order(n, parents, children_of(n, parents));
}

Skeleton skeleton(const Dag& g) {
  Skeleton s;
  s.pairs.reserve(g.edge_count());
  for (int head = 0; head < g.node_count(); ++head)
    for (int tail : g.parents(head))
      s.pairs.emplace_back(std::min(tail, head), std::max(tail, head));
  std::sort(s.pairs.begin(), s.pairs.end());
  return s;
}

std::vector<VStructure> v_structures(const Dag& g) {
  std::vector<VStructure> out;
  for (int y = 0; y < g.node_count(); ++y) {
    const auto& par = g.parents(y);
    for (std::size_t i = 0; i < par.size(); ++i) {
      for (std::size_t j = i + 1; j < par.size(); ++j) {
        if (!g.adjacent(par[i], par[j])) out.push_back(VStructure{par[i], y, par[j]});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_covered(const Dag& g, Edge e) {
  if (!g.has_edge(e)) throw MissingEdgeError("edge " + to_string(e) + " not in graph");
  const auto& tail_parents = g.parents(e.tail);
  if (g.parents(e.head).size() != tail_parents.size() + 1) return false;
  for (int p : tail_parents)
    if (!g.has_edge(p, e.head)) return false;
  return true;
}

bool equivalent(const Dag& g, const Dag& h) {
  if (g.node_count() != h.node_count())
    throw NodeCountMismatchError("node counts differ: " + std::to_string(g.node_count()) +
                                 " vs " + std::to_string(h.node_count()));
  return skeleton(g) == skeleton(h) && v_structures(g) == v_structures(h);
}

std::optional<std::string> inequivalence_reason(const Dag& g, const Dag& h) {
  if (g.node_count() != h.node_count())
    throw NodeCountMismatchError("node counts differ: " + std::to_string(g.node_count()) +
                                 " vs " + std::to_string(h.node_count()));

  auto sg = skeleton(g), sh = skeleton(h);
  if (sg != sh) {
    for (const auto& p : sg.pairs) {
      if (!std::binary_search(sh.pairs.begin(), sh.pairs.end(), p))
        return "skeleton mismatch (" + g.name_of(p.first) + " - " + g.name_of(p.second) +
               " only in first)";
    }
    for (const auto& p : sh.pairs) {
      if (!std::binary_search(sg.pairs.begin(), sg.pairs.end(), p))
        return "skeleton mismatch (" + g.name_of(p.first) + " - " + g.name_of(p.second) +
               " only in second)";
    }
  }
  auto vg = v_structures(g), vh = v_structures(h);
  if (vg != vh) {
    auto render = [&](const VStructure& v) {
      return "(" + g.name_of(v.x) + ", " + g.name_of(v.y) + ", " + g.name_of(v.z) + ")";
    };
    for (const auto& v : vg)
      if (!std::binary_search(vh.begin(), vh.end(), v))
        return "v-structure mismatch (" + render(v) + " only in first)";
    for (const auto& v : vh)
      if (!std::binary_search(vg.begin(), vg.end(), v))
        return "v-structure mismatch (" + render(v) + " only in second)";
  }
  return std::nullopt;
}

std::vector<Edge> delta(const Dag& g, const Dag& h) {
  if (skeleton(g) != skeleton(h)) throw SkeletonMismatchError("skeletons differ");
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (h.has_edge(e.head, e.tail)) out.push_back(e);
  return out;
}

std::vector<Edge> delta_into(const Dag& g, const Dag& h, int node) {
  std::vector<Edge> out;
  for (const Edge& e : delta(g, h))
    if (e.head == node) out.push_back(e);
  return out;
}

Dag reverse_edge(const Dag& g, Edge e) {
  if (!g.has_edge(e)) throw MissingEdgeError("edge " + to_string(e) + " not in graph");
  std::vector<Edge> edges = g.edges();
  for (Edge& cur : edges)
    if (cur == e) cur = Edge{e.head, e.tail};
  return Dag::from_edges(g.node_count(), edges, g.names());
}

}  // namespace mec
