#include "mec/transform.hpp"

#include <algorithm>
#include <unordered_set>

namespace mec {

namespace {

void require_equivalent(const Dag& g, const Dag& h) {
  if (auto reason = inequivalence_reason(g, h))
    throw NotEquivalentError("not equivalent: " + *reason);
}

void validate_member_set(const Dag& g, const std::vector<int>& members) {
  if (members.empty()) throw InvalidArgumentError("member set is empty");
  std::unordered_set<int> seen;
  for (int v : members) {
    if (v < 0 || v >= g.node_count())
      throw InvalidArgumentError("node " + std::to_string(v) + " out of range");
    if (!seen.insert(v).second)
      throw InvalidArgumentError("node " + std::to_string(v) + " listed twice");
  }
}

}  // namespace

Edge find_edge(const Dag& g, const Dag& h) {
  require_equivalent(g, h);
  if (g == h) throw NoDifferenceError("graphs are identical");

  std::vector<int> position(g.node_count());
  {
    auto order = topological_sort(g);
    for (int i = 0; i < g.node_count(); ++i) position[order[i]] = i;
  }

  // P_y = delta tails per head; pick the sort-minimal head with P_y nonempty,
  // then the sort-maximal tail within it.
  int best_head = -1;
  for (const Edge& e : delta(g, h)) {
    if (best_head < 0 || position[e.head] < position[best_head]) best_head = e.head;
  }
  int best_tail = -1;
  for (const Edge& e : delta(g, h)) {
    if (e.head == best_head && (best_tail < 0 || position[e.tail] > position[best_tail]))
      best_tail = e.tail;
  }
  return Edge{best_tail, best_head};
}

TransformSequence build_sequence(const Dag& g, const Dag& h) {
  require_equivalent(g, h);

  TransformSequence seq;
  seq.start = g;
  seq.target = h;
  seq.intermediates.push_back(g);

  Dag current = g;
  while (!(current == h)) {
    Edge e = find_edge(current, h);
    current = reverse_edge(current, e);
    seq.edges.push_back(e);
    seq.intermediates.push_back(current);
  }
  return seq;
}

bool is_covered_clique(const Dag& g, const std::vector<int>& members) {
  validate_member_set(g, members);

  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!g.adjacent(members[i], members[j])) return false;

  std::unordered_set<int> inside(members.begin(), members.end());
  for (int m : members) {
    for (int p : g.parents(m)) {
      if (inside.count(p)) continue;
      for (int other : members)
        if (!g.has_edge(p, other)) return false;
    }
  }
  return true;
}

Dag reorient_clique(const Dag& g, const std::vector<int>& members,
                    const std::vector<int>& order) {
  if (!is_covered_clique(g, members))
    throw NotCoveredCliqueError("node set is not a covered clique");

  if (order.size() != members.size())
    throw InvalidArgumentError("order must be a permutation of the member set");
  std::vector<int> a = members, b = order;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw InvalidArgumentError("order must be a permutation of the member set");

  std::vector<int> rank(g.node_count(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);

  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    if (rank[e.tail] >= 0 && rank[e.head] >= 0 && rank[e.tail] > rank[e.head])
      e = Edge{e.head, e.tail};
  }
  return Dag::from_edges(g.node_count(), edges, g.names());
}

}  // namespace mec
