#ifndef MEC_TRANSFORM_HPP
#define MEC_TRANSFORM_HPP

#include <vector>

#include "mec/dag.hpp"

namespace mec {

// An ordered run of covered-edge reversals turning `start` into `target`.
// intermediates[0] == start, intermediates.back() == target, and
// intermediates[k+1] == reverse_edge(intermediates[k], edges[k]) where each
// edges[k] is covered in intermediates[k]. Every intermediate is a DAG
// equivalent to the target.
struct TransformSequence {
  Dag start;
  Dag target;
  std::vector<Edge> edges;
  std::vector<Dag> intermediates;

  int length() const noexcept { return static_cast<int>(edges.size()); }
};

// Picks the edge x -> y from delta(g, h) where y is the earliest node in the
// topological sort of g with an incoming delta edge, and x is the latest such
// tail. The returned edge is always covered in g. Throws NotEquivalentError
// or NoDifferenceError (g == h).
Edge find_edge(const Dag& g, const Dag& h);

// Repeatedly reverses find_edge(g_i, h) until h is reached; the run has
// exactly |delta(g, h)| steps. g == h yields an empty sequence.
// Throws NotEquivalentError.
TransformSequence build_sequence(const Dag& g, const Dag& h);

// True iff `members` induces a clique in g and every parent outside the set
// of any member is a parent of all members. `members` must be non-empty,
// distinct, in range.
bool is_covered_clique(const Dag& g, const std::vector<int>& members);

// Reorients the clique's internal edges to follow `order` (earlier entries
// become ancestors); everything else is untouched. The result is a DAG
// equivalent to g. `order` must be a permutation of the covered clique's
// members. Throws NotCoveredCliqueError.
Dag reorient_clique(const Dag& g, const std::vector<int>& members,
                    const std::vector<int>& order);

}  // namespace mec

#endif  // MEC_TRANSFORM_HPP
