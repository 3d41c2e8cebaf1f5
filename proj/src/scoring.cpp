#include "mec/scoring.hpp"

#include <cmath>

namespace mec {

namespace {

void validate_cardinalities(const std::vector<int>& cardinalities) {
  for (std::size_t i = 0; i < cardinalities.size(); ++i)
    if (cardinalities[i] < 2)
      throw InvalidArgumentError("variable " + std::to_string(i) + " has cardinality " +
                                 std::to_string(cardinalities[i]) + "; at least 2 required");
}

void validate_prior(const PriorSpec& p) {
  if (!(p.equivalent_sample_size > 0.0))
    throw InvalidArgumentError("equivalent sample size must be positive");
  if (!(p.mdl2_constant > 0.0))
    throw InvalidArgumentError("mdl2 constant must be positive");
}

std::int64_t require_nonempty(const Dataset& d) {
  if (d.case_count() == 0)
    throw UndefinedForEmptyDataError("metric is undefined for an empty dataset (ln N)");
  return d.case_count();
}

double log_ml_value(const Counts& c) {
  double total = 0.0;
  for (const FamilyCounts& f : c.families) {
    for (std::int64_t j = 0; j < f.q; ++j) {
      if (f.nij[j] == 0) continue;
      for (int k = 0; k < f.r; ++k) {
        std::int64_t n = f.njk[j * f.r + k];
        if (n > 0)
          total += static_cast<double>(n) *
                   std::log(static_cast<double>(n) / static_cast<double>(f.nij[j]));
      }
    }
  }
  return total;
}

}  // namespace

Dataset::Dataset(std::vector<int> cardinalities, const std::vector<std::vector<int>>& cases,
                 std::vector<std::string> names)
    : cardinalities_(std::move(cardinalities)), names_(std::move(names)) {
  validate_cardinalities(cardinalities_);
  if (!names_.empty() && names_.size() != cardinalities_.size())
    throw InvalidArgumentError("name list length does not match variable count");

  int width = variable_count();
  values_.reserve(cases.size() * width);
  for (std::size_t row = 0; row < cases.size(); ++row) {
    if (static_cast<int>(cases[row].size()) != width)
      throw InvalidArgumentError("case " + std::to_string(row) + " has " +
                                 std::to_string(cases[row].size()) + " values, expected " +
                                 std::to_string(width));
    for (int var = 0; var < width; ++var) {
      int v = cases[row][var];
      if (v < 0 || v >= cardinalities_[var])
        throw InvalidArgumentError("case " + std::to_string(row) + ", variable " +
                                   std::to_string(var) + ": value " + std::to_string(v) +
                                   " outside 0.." + std::to_string(cardinalities_[var] - 1));
      values_.push_back(v);
    }
  }
  case_count_ = static_cast<std::int64_t>(cases.size());
}

std::string Dataset::name_of(int var) const {
  if (has_names()) return names_[var];
  return "x" + std::to_string(var);
}

Counts counts(const Dag& g, const Dataset& d) {
  if (g.node_count() != d.variable_count())
    throw CardinalityMismatchError("graph has " + std::to_string(g.node_count()) +
                                   " nodes but dataset has " +
                                   std::to_string(d.variable_count()) + " variables");

  Counts out;
  out.case_count = d.case_count();
  out.families.resize(g.node_count());
  for (int i = 0; i < g.node_count(); ++i) {
    FamilyCounts& f = out.families[i];
    f.r = d.cardinality(i);
    f.q = 1;
    for (int p : g.parents(i)) f.q *= d.cardinality(p);
    f.njk.assign(f.q * f.r, 0);
    f.nij.assign(f.q, 0);
  }

  for (std::int64_t c = 0; c < d.case_count(); ++c) {
    for (int i = 0; i < g.node_count(); ++i) {
      FamilyCounts& f = out.families[i];
      std::int64_t j = 0, radix = 1;
      for (int p : g.parents(i)) {
        j += radix * d.value(c, p);
        radix *= d.cardinality(p);
      }
      ++f.njk[j * f.r + d.value(c, i)];
      ++f.nij[j];
    }
  }
  return out;
}

std::int64_t dim_node(const std::vector<int>& cardinalities, int node,
                      const std::vector<int>& parents) {
  validate_cardinalities(cardinalities);
  std::int64_t result = cardinalities[node] - 1;
  for (int p : parents) result *= cardinalities[p];
  return result;
}

std::int64_t dim(const Dag& g, const std::vector<int>& cardinalities) {
  if (static_cast<int>(cardinalities.size()) != g.node_count())
    throw CardinalityMismatchError("cardinality vector length does not match node count");
  std::int64_t total = 0;
  for (int i = 0; i < g.node_count(); ++i) total += dim_node(cardinalities, i, g.parents(i));
  return total;
}

std::string to_string(Metric metric) {
  switch (metric) {
    case Metric::LogMl:
      return "ml";
    case Metric::Aic:
      return "aic";
    case Metric::Bic:
      return "bic";
    case Metric::Mdl1:
      return "mdl1";
    case Metric::Mdl2:
      return "mdl2";
    case Metric::BdeLikelihood:
      return "bde";
    case Metric::BayesianScore:
      return "bayes";
  }
  return "?";
}

ScoreValue log_ml(const Dag& g, const Dataset& d) {
  return {Metric::LogMl, log_ml_value(counts(g, d))};
}

ScoreValue aic(const Dag& g, const Dataset& d) {
  double penalty = static_cast<double>(dim(g, d.cardinalities()));
  return {Metric::Aic, log_ml(g, d).value - penalty};
}

ScoreValue bic(const Dag& g, const Dataset& d) {
  std::int64_t n = require_nonempty(d);
  double penalty = 0.5 * static_cast<double>(dim(g, d.cardinalities())) *
                   std::log(static_cast<double>(n));
  return {Metric::Bic, log_ml(g, d).value - penalty};
}

ScoreValue mdl1(const Dag& g, const Dataset& d, const PriorSpec& p) {
  return {Metric::Mdl1, p.structure_log_prior(g) + bic(g, d).value};
}

ScoreValue mdl2(const Dag& g, const Dataset& d, const PriorSpec& p) {
  validate_prior(p);
  std::int64_t n = require_nonempty(d);
  double value = log_ml(g, d).value -
                 static_cast<double>(g.edge_count()) * std::log(static_cast<double>(n)) -
                 p.mdl2_constant * static_cast<double>(dim(g, d.cardinalities()));
  return {Metric::Mdl2, value};
}

namespace {

double bde_family_term(const FamilyCounts& f, double alpha) {
  double prior_jk = alpha / (static_cast<double>(f.r) * static_cast<double>(f.q));
  double prior_j = alpha / static_cast<double>(f.q);

  double total = 0.0;
  for (std::int64_t j = 0; j < f.q; ++j) {
    if (f.nij[j] == 0) continue;  // all gamma terms cancel
    total += std::lgamma(prior_j) - std::lgamma(prior_j + static_cast<double>(f.nij[j]));
    for (int k = 0; k < f.r; ++k) {
      std::int64_t n = f.njk[j * f.r + k];
      if (n > 0)
        total += std::lgamma(prior_jk + static_cast<double>(n)) - std::lgamma(prior_jk);
    }
  }
  return total;
}

}  // namespace

double bde_family_log_likelihood(const Dag& g, const Dataset& d, const PriorSpec& p, int node) {
  validate_prior(p);
  return bde_family_term(counts(g, d).families[node], p.equivalent_sample_size);
}

ScoreValue bde_log_likelihood(const Dag& g, const Dataset& d, const PriorSpec& p) {
  validate_prior(p);
  Counts c = counts(g, d);
  double total = 0.0;
  for (const FamilyCounts& f : c.families) total += bde_family_term(f, p.equivalent_sample_size);
  return {Metric::BdeLikelihood, total};
}

ScoreValue bayesian_score(const Dag& g, const Dataset& d, const PriorSpec& p) {
  return {Metric::BayesianScore, p.structure_log_prior(g) + bde_log_likelihood(g, d, p).value};
}

}  // namespace mec
