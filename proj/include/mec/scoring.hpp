#ifndef MEC_SCORING_HPP
#define MEC_SCORING_HPP

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "mec/dag.hpp"

namespace mec {

// Complete discrete dataset: per-variable cardinalities r_i >= 2 and N cases
// of category codes 0..r_i-1. No missing values.
class Dataset {
 public:
  Dataset(std::vector<int> cardinalities, const std::vector<std::vector<int>>& cases,
          std::vector<std::string> names = {});

  int variable_count() const noexcept { return static_cast<int>(cardinalities_.size()); }
  std::int64_t case_count() const noexcept { return case_count_; }
  int cardinality(int var) const { return cardinalities_[var]; }
  const std::vector<int>& cardinalities() const noexcept { return cardinalities_; }
  int value(std::int64_t case_index, int var) const {
    return values_[case_index * variable_count() + var];
  }

  bool has_names() const noexcept { return !names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::string name_of(int var) const;

 private:
  std::vector<int> cardinalities_;
  std::vector<int> values_;  // row-major
  std::int64_t case_count_ = 0;
  std::vector<std::string> names_;
};

// Sufficient statistics for one node: q parent configurations, with njk laid
// out as njk[j * r + k]. The configuration index j is the mixed-radix code of
// the parent values in ascending parent-index order, lowest index least
// significant.
struct FamilyCounts {
  std::int64_t q = 1;
  int r = 0;
  std::vector<std::int64_t> njk;
  std::vector<std::int64_t> nij;
};

struct Counts {
  std::int64_t case_count = 0;
  std::vector<FamilyCounts> families;
};

// Throws CardinalityMismatchError when the dataset width differs from the
// graph's node count.
Counts counts(const Dag& g, const Dataset& d);

// Free parameters of p(x_i | parents): (r_i - 1) * prod of parent
// cardinalities. All cardinalities must be >= 2.
std::int64_t dim_node(const std::vector<int>& cardinalities, int node,
                      const std::vector<int>& parents);

// Sum of dim_node over all nodes; invariant across an equivalence class.
std::int64_t dim(const Dag& g, const std::vector<int>& cardinalities);

enum class Metric {
  LogMl,
  Aic,
  Bic,
  Mdl1,
  Mdl2,
  BdeLikelihood,
  BayesianScore,
};

std::string to_string(Metric metric);

// A score on the natural-log scale.
struct ScoreValue {
  Metric metric = Metric::LogMl;
  double value = 0.0;
};

// Dirichlet and structure-prior choices. The Dirichlet prior is the uniform
// joint (BDeu): N'_ijk = equivalent_sample_size / (r_i * q_i). The structure
// prior is uniform, so its log contribution is zero.
struct PriorSpec {
  // 32 bits per stored numerical value, in natural-log units.
  static constexpr double kDefaultMdl2Constant = 32.0 * std::numbers::ln2;

  double equivalent_sample_size = 1.0;
  double mdl2_constant = kDefaultMdl2Constant;

  double structure_log_prior(const Dag&) const { return 0.0; }
};

// Maximized log likelihood: sum of N_ijk * ln(N_ijk / N_ij), empty cells
// contributing zero.
ScoreValue log_ml(const Dag& g, const Dataset& d);

// log_ml minus the parameter count.
ScoreValue aic(const Dag& g, const Dataset& d);

// log_ml minus (Dim/2) ln N. Throws UndefinedForEmptyDataError when N = 0.
ScoreValue bic(const Dag& g, const Dataset& d);

// Uniform structure prior plus bic. Throws UndefinedForEmptyDataError.
ScoreValue mdl1(const Dag& g, const Dataset& d, const PriorSpec& p);

// log_ml - |E| ln N - c Dim. Throws UndefinedForEmptyDataError.
ScoreValue mdl2(const Dag& g, const Dataset& d, const PriorSpec& p);

// Log marginal likelihood under the BDeu Dirichlet prior; sums per-family
// log-gamma terms and is likelihood equivalent across an equivalence class.
ScoreValue bde_log_likelihood(const Dag& g, const Dataset& d, const PriorSpec& p);

// One family's contribution to bde_log_likelihood.
double bde_family_log_likelihood(const Dag& g, const Dataset& d, const PriorSpec& p, int node);

// Structure log prior plus BDe log likelihood (the arbitrary constant taken
// as zero).
ScoreValue bayesian_score(const Dag& g, const Dataset& d, const PriorSpec& p);

}  // namespace mec

#endif  // MEC_SCORING_HPP
