#ifndef MEC_DAG_HPP
#define MEC_DAG_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mec/errors.hpp"

namespace mec {

struct Edge {
  int tail = 0;
  int head = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    auto k = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.tail)) << 32) |
             static_cast<std::uint32_t>(e.head);
    return std::hash<std::uint64_t>{}(k);
  }
};

// "0 -> 1", index form; name-aware rendering lives with the text format.
std::string to_string(Edge e);

// Unordered adjacency pairs, each stored as (low, high), sorted ascending.
struct Skeleton {
  std::vector<std::pair<int, int>> pairs;

  friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

// Collider x -> y <- z with x and z non-adjacent, canonicalized so x < z.
struct VStructure {
  int x = 0;
  int y = 0;
  int z = 0;

  friend constexpr auto operator<=>(const VStructure&, const VStructure&) = default;
};

// Immutable directed acyclic graph over nodes 0..n-1. Keeps a sorted parent
// list per node plus a hash membership set so parent/adjacency tests are
// constant time on average. Acyclicity is validated at construction; a cyclic
// edge set is unrepresentable.
class Dag {
 public:
  // The zero-node graph.
  Dag() = default;

  // Throws InvalidArgumentError (endpoint out of range), SelfLoopError,
  // DuplicateEdgeError, or CycleError (with a witness cycle).
  static Dag from_edges(int node_count, const std::vector<Edge>& edges,
                        std::vector<std::string> names = {});

  int node_count() const noexcept { return node_count_; }
  int edge_count() const noexcept { return edge_count_; }

  // Parents of `node`, sorted ascending.
  const std::vector<int>& parents(int node) const { return parents_[node]; }

  bool has_edge(int tail, int head) const {
    return parent_sets_[head].count(tail) > 0;
  }
  bool has_edge(Edge e) const { return has_edge(e.tail, e.head); }
  bool adjacent(int a, int b) const { return has_edge(a, b) || has_edge(b, a); }

  // All edges, sorted ascending by (tail, head).
  std::vector<Edge> edges() const;

  bool has_names() const noexcept { return !names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  // Node label: the given name, or the index rendered as text.
  std::string name_of(int node) const;

  // Structural equality; names are labels and do not participate.
  friend bool operator==(const Dag& a, const Dag& b) {
    return a.node_count_ == b.node_count_ && a.parents_ == b.parents_;
  }

 private:
  int node_count_ = 0;
  int edge_count_ = 0;
  std::vector<std::vector<int>> parents_;
  std::vector<std::unordered_set<int>> parent_sets_;
  std::vector<std::string> names_;
};

// Node order in which every edge goes from an earlier to a later node.
// Among simultaneously-ready nodes the smallest index is emitted first, so
// the order is unique and all downstream edge orders are reproducible.
std::vector<int> topological_sort(const Dag& g);

Skeleton skeleton(const Dag& g);

// All v-structures, sorted.
std::vector<VStructure> v_structures(const Dag& g);

// True iff parents(head) = parents(tail) + {tail}. Throws MissingEdgeError.
bool is_covered(const Dag& g, Edge e);

// Verma-Pearl test: same skeleton and same v-structures.
// Throws NodeCountMismatchError.
bool equivalent(const Dag& g, const Dag& h);

// Human-readable reason why g and h are not equivalent, or nullopt when they
// are. Same preconditions as equivalent().
std::optional<std::string> inequivalence_reason(const Dag& g, const Dag& h);

// Edges of g oriented the opposite way in h, sorted by (tail, head).
// Requires equal skeletons; throws SkeletonMismatchError.
std::vector<Edge> delta(const Dag& g, const Dag& h);

// The subset of delta(g, h) whose head is `node`.
std::vector<Edge> delta_into(const Dag& g, const Dag& h, int node);

// Fresh Dag identical to g except e is reversed. Throws MissingEdgeError, or
// CycleError when the reversal closes a directed cycle.
Dag reverse_edge(const Dag& g, Edge e);

}  // namespace mec

#endif  // MEC_DAG_HPP
