#ifndef MEC_TESTS_SUPPORT_HPP
#define MEC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "mec/dag.hpp"
#include "mec/scoring.hpp"

namespace mec::test {

inline Dag make_dag(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> es;
  for (auto [t, h] : edges) es.push_back(Edge{t, h});
  return Dag::from_edges(n, es);
}

inline Dataset random_dataset(std::mt19937_64& rng, const std::vector<int>& cardinalities,
                              int case_count) {
  std::vector<std::vector<int>> rows(case_count, std::vector<int>(cardinalities.size()));
  for (auto& row : rows)
    for (std::size_t v = 0; v < cardinalities.size(); ++v)
      row[v] = std::uniform_int_distribution<int>(0, cardinalities[v] - 1)(rng);
  return Dataset(cardinalities, rows);
}

// Random DAG consistent with a shuffled node order.
inline Dag random_dag(std::mt19937_64& rng, int n, double edge_prob) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Edge> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < edge_prob) edges.push_back(Edge{order[i], order[j]});
  return Dag::from_edges(n, edges);
}

// Independent brute-force enumeration for cross-checking enumerate_dags:
// walks every subset of ordered pairs and filters with a DFS cycle check,
// sharing no code with the library's generator.
inline std::vector<std::vector<Edge>> naive_all_dag_edge_sets(int n) {
  std::vector<std::pair<int, int>> ordered_pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) ordered_pairs.emplace_back(a, b);

  auto acyclic = [n](const std::vector<std::vector<int>>& children) {
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
    std::vector<std::pair<int, int>> stack;
    for (int root = 0; root < n; ++root) {
      if (state[root]) continue;
      stack.push_back({root, 0});
      state[root] = 1;
      while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < static_cast<int>(children[v].size())) {
          int c = children[v][next++];
          if (state[c] == 1) return false;
          if (state[c] == 0) {
            state[c] = 1;
            stack.push_back({c, 0});
          }
        } else {
          state[v] = 2;
          stack.pop_back();
        }
      }
    }
    return true;
  };

  std::vector<std::vector<Edge>> result;
  for (std::uint32_t mask = 0; mask < (1u << ordered_pairs.size()); ++mask) {
    std::vector<std::vector<int>> children(n);
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < ordered_pairs.size() && simple; ++i) {
      if (!(mask & (1u << i))) continue;
      auto [a, b] = ordered_pairs[i];
      for (int c : children[b])
        if (c == a) simple = false;  // both directions present
      children[a].push_back(b);
      edges.push_back(Edge{a, b});
    }
    if (!simple || !acyclic(children)) continue;
    std::sort(edges.begin(), edges.end());
    result.push_back(std::move(edges));
  }
  return result;
}

}  // namespace mec::test

#endif  // MEC_TESTS_SUPPORT_HPP
