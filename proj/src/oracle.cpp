#include "mec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace mec {

namespace {

constexpr int kMaxEnumerationNodes = 5;
constexpr int kMaxPosteriorNodes = 4;

// Orients every selected skeleton pair both ways, pruning orientations that
// close a cycle. reach[v] is the bitmask of nodes reachable from v
// (including v); it is copied per recursion level, which is cheap at n <= 5.
void orient_pairs(int n, const std::vector<std::pair<int, int>>& selected, std::size_t next,
                  std::vector<Edge>& edges, std::vector<std::uint32_t> reach,
                  std::vector<Dag>& out) {
  if (next == selected.size()) {
    out.push_back(Dag::from_edges(n, edges));
    return;
  }
  auto [a, b] = selected[next];
  for (auto [tail, head] : {std::pair{a, b}, std::pair{b, a}}) {
    if (reach[head] & (1u << tail)) continue;  // head already reaches tail
    auto updated = reach;
    for (int v = 0; v < n; ++v)
      if (updated[v] & (1u << tail)) updated[v] |= updated[head];
    edges.push_back(Edge{tail, head});
    orient_pairs(n, selected, next + 1, edges, std::move(updated), out);
    edges.pop_back();
  }
}

}  // namespace

DagUniverse enumerate_dags(int n) {
  if (n < 1) throw InvalidArgumentError("node count must be at least 1");
  if (n > kMaxEnumerationNodes)
    throw TooLargeError("enumeration capped at " + std::to_string(kMaxEnumerationNodes) +
                        " nodes; got " + std::to_string(n));

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);

  DagUniverse u;
  u.n = n;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> selected;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask & (1u << i)) selected.push_back(pairs[i]);

    std::vector<std::uint32_t> reach(n);
    for (int v = 0; v < n; ++v) reach[v] = 1u << v;
    std::vector<Edge> edges;
    orient_pairs(n, selected, 0, edges, std::move(reach), u.all_dags);
  }
  return u;
}

std::vector<EquivalenceClass> partition_classes(const DagUniverse& u) {
  std::map<std::string, std::vector<Dag>> by_key;
  for (const Dag& g : u.all_dags) by_key[same_class_key(g)].push_back(g);

  std::vector<EquivalenceClass> classes;
  classes.reserve(by_key.size());
  for (auto& [key, members] : by_key)
    classes.push_back(EquivalenceClass{key, std::move(members)});
  return classes;
}

EdgeLabeling compelled_by_definition(const Dag& g, const EquivalenceClass& cls) {
  bool member = std::any_of(cls.members.begin(), cls.members.end(),
                            [&](const Dag& m) { return m == g; });
  if (!member) throw NotMemberError("graph is not a member of the class");

  EdgeLabeling labels;
  for (const Edge& e : g.edges()) {
    bool in_all = std::all_of(cls.members.begin(), cls.members.end(),
                              [&](const Dag& m) { return m.has_edge(e); });
    labels.emplace(e, in_all ? EdgeLabel::Compelled : EdgeLabel::Reversible);
  }
  return labels;
}

double causal_edge_posterior(CausalStatement s, const Dataset& d, const PriorSpec& p,
                             CausalInterpretation interpretation) {
  int n = d.variable_count();
  if (n > kMaxPosteriorNodes)
    throw TooLargeError("exact posterior capped at " + std::to_string(kMaxPosteriorNodes) +
                        " variables; got " + std::to_string(n));
  if (s.tail < 0 || s.tail >= n || s.head < 0 || s.head >= n)
    throw InvalidArgumentError("statement nodes out of range");
  if (s.tail == s.head) throw InvalidArgumentError("statement nodes must differ");

  DagUniverse u = enumerate_dags(n);

  // Per-DAG uniform prior: posterior weights are normalized likelihoods.
  std::vector<double> log_lik(u.all_dags.size());
  double max_ll = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < u.all_dags.size(); ++i) {
    log_lik[i] = bde_log_likelihood(u.all_dags[i], d, p).value;
    max_ll = std::max(max_ll, log_lik[i]);
  }
  double norm = 0.0;
  std::vector<double> weight(u.all_dags.size());
  for (std::size_t i = 0; i < weight.size(); ++i) {
    weight[i] = std::exp(log_lik[i] - max_ll);
    norm += weight[i];
  }
  for (double& w : weight) w /= norm;

  Edge e{s.tail, s.head};
  if (interpretation == CausalInterpretation::Causal) {
    double total = 0.0;
    for (std::size_t i = 0; i < weight.size(); ++i)
      if (u.all_dags[i].has_edge(e)) total += weight[i];
    return total;
  }

  // Acausal: group by class; each class contributes its posterior mass times
  // the fraction of members containing the edge.
  std::map<std::string, std::pair<double, std::pair<int, int>>> per_class;  // mass, (with, size)
  for (std::size_t i = 0; i < weight.size(); ++i) {
    auto& entry = per_class[same_class_key(u.all_dags[i])];
    entry.first += weight[i];
    entry.second.second += 1;
    if (u.all_dags[i].has_edge(e)) entry.second.first += 1;
  }
  double total = 0.0;
  for (const auto& [key, entry] : per_class) {
    auto [mass, counts] = entry;
    auto [with_edge, size] = counts;
    if (with_edge > 0)
      total += mass * (static_cast<double>(with_edge) / static_cast<double>(size));
  }
  return total;
}

std::vector<ClassStats> class_statistics(const DagUniverse& u,
                                         const std::vector<int>& cardinalities) {
  std::vector<ClassStats> rows;
  for (const EquivalenceClass& cls : partition_classes(u)) {
    const Dag& rep = cls.members.front();

    ClassStats row;
    row.key = cls.key;
    row.size = static_cast<int>(cls.members.size());
    row.edge_count = rep.edge_count();
    for (const auto& [edge, label] : compelled_by_definition(rep, cls))
      if (label == EdgeLabel::Compelled) ++row.compelled_count;
    row.dim = dim(rep, cardinalities);
    for (int v = 0; v < rep.node_count(); ++v)
      row.parent_size_multiset.push_back(static_cast<int>(rep.parents(v).size()));
    std::sort(row.parent_size_multiset.begin(), row.parent_size_multiset.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace mec
