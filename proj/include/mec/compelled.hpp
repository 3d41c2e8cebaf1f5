#ifndef MEC_COMPELLED_HPP
#define MEC_COMPELLED_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "mec/dag.hpp"

namespace mec {

enum class EdgeLabel { Unknown, Compelled, Reversible };

std::string to_string(EdgeLabel label);

// Total order over the edges of one DAG: edges are grouped by head in
// ascending node-sort position and, within a head, by descending node-sort
// position of the tail.
class EdgeOrder {
 public:
  EdgeOrder() = default;
  explicit EdgeOrder(std::vector<Edge> by_index);

  int size() const noexcept { return static_cast<int>(by_index_.size()); }
  Edge edge_at(int order_index) const { return by_index_[order_index]; }
  const std::vector<Edge>& edges() const noexcept { return by_index_; }
  // Throws MissingEdgeError for edges outside the order.
  int index_of(Edge e) const;

 private:
  std::vector<Edge> by_index_;
  std::unordered_map<Edge, int, EdgeHash> index_of_;
};

EdgeOrder order_edges(const Dag& g);

using EdgeLabeling = std::unordered_map<Edge, EdgeLabel, EdgeHash>;

// Labels every edge Compelled (same orientation in every equivalent DAG) or
// Reversible. Average O(|E|) with the hash parent-membership structure.
//
// check_proof_obligations turns on internal assertions of the selection-time
// invariants the correctness proof relies on (all in-edges of the selected
// head unlabeled; parents of the head adjacent to the tail are parents of
// the tail; compelled selected edges leave the whole in-bundle compelled).
// They throw std::logic_error on violation and are meant for tests only.
EdgeLabeling find_compelled(const Dag& g, bool check_proof_obligations = false);

enum class PdagKind { Minimal, Completed, Other };

std::string to_string(PdagKind kind);

// One skeleton pair of a partially directed graph. Directed pairs keep their
// orientation; undirected pairs are stored with tail < head.
struct PdagEdge {
  int tail = 0;
  int head = 0;
  bool directed = false;

  friend constexpr auto operator<=>(const PdagEdge&, const PdagEdge&) = default;
};

// Partially directed graph representing an equivalence class. Completed kind:
// directed pairs are exactly the compelled edges. Minimal kind: directed
// pairs are exactly the edges participating in some v-structure.
class Pdag {
 public:
  Pdag() = default;
  Pdag(PdagKind kind, std::vector<PdagEdge> edges, std::vector<std::string> names = {});

  PdagKind kind() const noexcept { return kind_; }
  // Sorted by canonical (low, high) node pair.
  const std::vector<PdagEdge>& edges() const noexcept { return edges_; }
  int directed_count() const;
  int undirected_count() const;

  bool has_names() const noexcept { return !names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  // Structural equality: kind plus edges; names do not participate.
  friend bool operator==(const Pdag& a, const Pdag& b) {
    return a.kind_ == b.kind_ && a.edges_ == b.edges_;
  }

 private:
  PdagKind kind_ = PdagKind::Other;
  std::vector<PdagEdge> edges_;
  std::vector<std::string> names_;
};

// Completed PDAG of g's equivalence class, derived from find_compelled.
Pdag to_completed_pdag(const Dag& g);

// Minimal PDAG: only v-structure edges stay directed.
Pdag to_minimal_pdag(const Dag& g);

// Canonical class key: equal for two DAGs iff they are equivalent (shared
// skeleton and v-structures). Usable as a hash-map key.
std::string same_class_key(const Dag& g);

}  // namespace mec

#endif  // MEC_COMPELLED_HPP
