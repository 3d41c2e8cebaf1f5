#ifndef MEC_ORACLE_HPP
#define MEC_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mec/compelled.hpp"
#include "mec/dag.hpp"
#include "mec/scoring.hpp"

namespace mec {

// Every labeled DAG on n nodes, in a deterministic order. Hard-capped at
// n <= 5 (29281 DAGs); growth beyond that is super-exponential.
struct DagUniverse {
  int n = 0;
  std::vector<Dag> all_dags;
};

// Throws TooLargeError for n > 5, InvalidArgumentError for n < 1.
DagUniverse enumerate_dags(int n);

// One Markov equivalence class: members share skeleton and v-structures.
struct EquivalenceClass {
  std::string key;  // same_class_key of every member
  std::vector<Dag> members;
};

// Classes keyed by same_class_key, sorted by key; members keep universe
// order. Union of members is all_dags and classes are pairwise disjoint.
std::vector<EquivalenceClass> partition_classes(const DagUniverse& u);

// Ground-truth labels straight from the definition: an edge is compelled iff
// it has the same orientation in every member of the class. Throws
// NotMemberError when g is not in cls.
EdgeLabeling compelled_by_definition(const Dag& g, const EquivalenceClass& cls);

// "tail is a direct cause of head".
struct CausalStatement {
  int tail = 0;
  int head = 0;
};

enum class CausalInterpretation { Causal, Acausal };

// Exact posterior of a direct-cause statement by summing over every DAG with
// a per-DAG uniform prior and BDe likelihoods.
//
// Causal interpretation: p(s|G^h) is 1 when the edge is present, else 0.
// Acausal interpretation: the sum runs over equivalence classes and each
// class term is weighted by the fraction of its members containing the edge
// (a reversible edge's p(s|G^h) is taken as that fraction).
//
// Throws TooLargeError when the dataset has more than 4 variables.
double causal_edge_posterior(CausalStatement s, const Dataset& d, const PriorSpec& p,
                             CausalInterpretation interpretation);

// Per-class summary row. dim and parent_size_multiset are class invariants;
// they are computed from the first member.
struct ClassStats {
  std::string key;
  int size = 0;
  int edge_count = 0;
  int compelled_count = 0;
  std::int64_t dim = 0;
  std::vector<int> parent_size_multiset;  // sorted ascending
};

std::vector<ClassStats> class_statistics(const DagUniverse& u,
                                         const std::vector<int>& cardinalities);

}  // namespace mec

#endif  // MEC_ORACLE_HPP
