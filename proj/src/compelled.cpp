#include "mec/compelled.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mec {

std::string to_string(EdgeLabel label) {
  switch (label) {
    case EdgeLabel::Unknown:
      return "unknown";
    case EdgeLabel::Compelled:
      return "compelled";
    case EdgeLabel::Reversible:
      return "reversible";
  }
  return "?";
}

std::string to_string(PdagKind kind) {
  switch (kind) {
    case PdagKind::Minimal:
      return "minimal";
    case PdagKind::Completed:
      return "completed";
    case PdagKind::Other:
      return "other";
  }
  return "?";
}

EdgeOrder::EdgeOrder(std::vector<Edge> by_index) : by_index_(std::move(by_index)) {
  index_of_.reserve(by_index_.size());
  for (int i = 0; i < static_cast<int>(by_index_.size()); ++i) index_of_[by_index_[i]] = i;
}

int EdgeOrder::index_of(Edge e) const {
  auto it = index_of_.find(e);
  if (it == index_of_.end()) throw MissingEdgeError("edge " + to_string(e) + " not in order");
  return it->second;
}

EdgeOrder order_edges(const Dag& g) {
  int n = g.node_count();
  auto order = topological_sort(g);

  // Stepping through nodes in ascending sort position and appending each to
  // its children's lists leaves every parent list in ascending position
  // order; reversing gives the descending order the edge ranking needs.
  std::vector<std::vector<int>> children(n);
  for (int head = 0; head < n; ++head)
    for (int tail : g.parents(head)) children[tail].push_back(head);

  std::vector<std::vector<int>> parents_desc(n);
  for (int head = 0; head < n; ++head) parents_desc[head].reserve(g.parents(head).size());
  for (int u : order)
    for (int c : children[u]) parents_desc[c].push_back(u);
  for (auto& lst : parents_desc) std::reverse(lst.begin(), lst.end());

  std::vector<Edge> by_index;
  by_index.reserve(g.edge_count());
  for (int y : order)
    for (int x : parents_desc[y]) by_index.push_back(Edge{x, y});
  return EdgeOrder(std::move(by_index));
}

namespace {

class FindCompelledRun {
 public:
  FindCompelledRun(const Dag& g, bool checks)
      : g_(g), checks_(checks), order_(order_edges(g)) {
    int m = order_.size();
    labels_.assign(m, EdgeLabel::Unknown);
    in_edges_.resize(g.node_count());
    compelled_in_.resize(g.node_count());
    for (int i = 0; i < m; ++i) in_edges_[order_.edge_at(i).head].push_back(i);
  }

  EdgeLabeling run() {
    int m = order_.size();
    int cursor = 0;
    while (labeled_ < m) {
      while (labels_[cursor] != EdgeLabel::Unknown) ++cursor;
      process(cursor);
    }
    if (checks_) verify_compelled_bundles();

    EdgeLabeling out;
    out.reserve(m);
    for (int i = 0; i < m; ++i) out.emplace(order_.edge_at(i), labels_[i]);
    return out;
  }

 private:
  void process(int selected) {
    Edge xy = order_.edge_at(selected);
    int x = xy.tail, y = xy.head;
    if (checks_) {
      check_all_in_edges_unknown(y);
      check_known_parents_shared(x, y);
      selected_.push_back(selected);
    }

    // Step 5-7: propagate through compelled edges into x.
    for (std::size_t i = 0; i < compelled_in_[x].size(); ++i) {
      int w = order_.edge_at(compelled_in_[x][i]).tail;
      if (!g_.has_edge(w, y)) {
        label_all_in_edges(y, EdgeLabel::Compelled);
        return;
      }
      label(order_.index_of(Edge{w, y}), EdgeLabel::Compelled);
    }

    // Step 8/9: x -> y sits in a v-structure iff some other parent of y is
    // not a parent of x.
    bool in_v_structure = false;
    for (int z : g_.parents(y)) {
      if (z != x && !g_.has_edge(z, x)) {
        in_v_structure = true;
        break;
      }
    }
    label_all_in_edges(y, in_v_structure ? EdgeLabel::Compelled : EdgeLabel::Reversible);
  }

  // Labels every still-unknown edge incident into y (the selected edge
  // included); edges already compelled by step 7 keep their label.
  void label_all_in_edges(int y, EdgeLabel value) {
    for (int idx : in_edges_[y])
      if (labels_[idx] == EdgeLabel::Unknown) label(idx, value);
  }

  void label(int idx, EdgeLabel value) {
    if (labels_[idx] != EdgeLabel::Unknown) return;
    labels_[idx] = value;
    ++labeled_;
    if (value == EdgeLabel::Compelled) compelled_in_[order_.edge_at(idx).head].push_back(idx);
  }

  void check_all_in_edges_unknown(int y) const {
    for (int idx : in_edges_[y])
      if (labels_[idx] != EdgeLabel::Unknown)
        throw std::logic_error("selection invariant violated: labeled edge into node " +
                               std::to_string(y) + " at selection time");
  }

  void check_known_parents_shared(int x, int y) const {
    for (int z : g_.parents(y))
      if (z != x && g_.adjacent(z, x) && !g_.has_edge(z, x))
        throw std::logic_error("selection invariant violated: parent " + std::to_string(z) +
                               " of " + std::to_string(y) + " adjacent to but not a parent of " +
                               std::to_string(x));
  }

  void verify_compelled_bundles() const {
    for (int idx : selected_) {
      if (labels_[idx] != EdgeLabel::Compelled) continue;
      int y = order_.edge_at(idx).head;
      for (int other : in_edges_[y])
        if (labels_[other] != EdgeLabel::Compelled)
          throw std::logic_error("compelled selected edge into node " + std::to_string(y) +
                                 " left a non-compelled in-edge");
    }
  }

  const Dag& g_;
  bool checks_;
  EdgeOrder order_;
  std::vector<EdgeLabel> labels_;
  std::vector<std::vector<int>> in_edges_;      // order indices by head
  std::vector<std::vector<int>> compelled_in_;  // order indices labeled compelled, by head
  std::vector<int> selected_;
  int labeled_ = 0;
};

}  // namespace

EdgeLabeling find_compelled(const Dag& g, bool check_proof_obligations) {
  return FindCompelledRun(g, check_proof_obligations).run();
}

Pdag::Pdag(PdagKind kind, std::vector<PdagEdge> edges, std::vector<std::string> names)
    : kind_(kind), edges_(std::move(edges)), names_(std::move(names)) {
  for (const PdagEdge& e : edges_)
    if (!e.directed && e.tail > e.head)
      throw InvalidArgumentError("undirected pair stored out of canonical order");
  std::sort(edges_.begin(), edges_.end(), [](const PdagEdge& a, const PdagEdge& b) {
    auto ka = std::minmax(a.tail, a.head);
    auto kb = std::minmax(b.tail, b.head);
    return ka < kb;
  });
}

int Pdag::directed_count() const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [](const PdagEdge& e) { return e.directed; }));
}

int Pdag::undirected_count() const {
  return static_cast<int>(edges_.size()) - directed_count();
}

Pdag to_completed_pdag(const Dag& g) {
  auto labels = find_compelled(g);
  std::vector<PdagEdge> edges;
  edges.reserve(labels.size());
  for (const Edge& e : g.edges()) {
    if (labels.at(e) == EdgeLabel::Compelled)
      edges.push_back(PdagEdge{e.tail, e.head, true});
    else
      edges.push_back(PdagEdge{std::min(e.tail, e.head), std::max(e.tail, e.head), false});
  }
  return Pdag(PdagKind::Completed, std::move(edges), g.names());
}

Pdag to_minimal_pdag(const Dag& g) {
  std::unordered_map<Edge, bool, EdgeHash> in_vstructure;
  for (const Edge& e : g.edges()) in_vstructure[e] = false;
  for (const VStructure& v : v_structures(g)) {
    in_vstructure[Edge{v.x, v.y}] = true;
    in_vstructure[Edge{v.z, v.y}] = true;
  }

  std::vector<PdagEdge> edges;
  edges.reserve(in_vstructure.size());
  for (const Edge& e : g.edges()) {
    if (in_vstructure.at(e))
      edges.push_back(PdagEdge{e.tail, e.head, true});
    else
      edges.push_back(PdagEdge{std::min(e.tail, e.head), std::max(e.tail, e.head), false});
  }
  return Pdag(PdagKind::Minimal, std::move(edges), g.names());
}

std::string same_class_key(const Dag& g) {
  std::ostringstream key;
  key << "n" << g.node_count() << "|s";
  for (const auto& [a, b] : skeleton(g).pairs) key << a << "-" << b << ",";
  key << "|v";
  for (const VStructure& v : v_structures(g)) key << v.x << "." << v.y << "." << v.z << ",";
  return key.str();
}

}  // namespace mec
