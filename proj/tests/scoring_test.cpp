#include "mec/scoring.hpp"

#include <cmath>

#include "doctest.h"
#include "mec/oracle.hpp"
#include "support.hpp"

using namespace mec;
using test::make_dag;

namespace {

Dataset single_binary(int zeros, int ones) {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < zeros; ++i) rows.push_back({0});
  for (int i = 0; i < ones; ++i) rows.push_back({1});
  return Dataset({2}, rows);
}

}  // namespace

TEST_CASE("dim_node and dim") {
  CHECK(dim_node({2}, 0, {}) == 1);
  CHECK(dim_node({3, 2, 2}, 0, {1, 2}) == 8);
  CHECK(dim_node({2, 3}, 0, {1}) == 3);

  Dag chain = make_dag(3, {{0, 1}, {1, 2}});
  Dag fork = make_dag(3, {{1, 0}, {1, 2}});
  std::vector<int> cards{2, 3, 2};
  CHECK(dim(chain, cards) == 8);
  CHECK(dim(fork, cards) == 8);
  CHECK(dim(make_dag(2, {}), {2, 2}) == 2);

  CHECK_THROWS_AS(dim(chain, {2, 2}), CardinalityMismatchError);
  CHECK_THROWS_AS(dim_node({1}, 0, {}), InvalidArgumentError);
}

TEST_CASE("counts on a two-node family") {
  Dag g = make_dag(2, {{0, 1}});
  Dataset d({2, 2}, {{0, 0}, {0, 1}, {1, 1}});
  Counts c = counts(g, d);
  REQUIRE(c.families.size() == 2);

  const FamilyCounts& child = c.families[1];
  CHECK(child.q == 2);
  CHECK(child.njk[0 * 2 + 0] == 1);  // x0=0, x1=0
  CHECK(child.njk[0 * 2 + 1] == 1);  // x0=0, x1=1
  CHECK(child.njk[1 * 2 + 0] == 0);
  CHECK(child.njk[1 * 2 + 1] == 1);  // x0=1, x1=1
  CHECK(child.nij == std::vector<std::int64_t>{2, 1});

  const FamilyCounts& root = c.families[0];
  CHECK(root.q == 1);
  CHECK(root.nij == std::vector<std::int64_t>{3});

  CHECK_THROWS_AS(counts(make_dag(3, {}), d), CardinalityMismatchError);
}

TEST_CASE("counts of an empty dataset are all zero") {
  Counts c = counts(make_dag(2, {{0, 1}}), Dataset({2, 2}, {}));
  CHECK(c.case_count == 0);
  for (const auto& f : c.families) {
    for (auto v : f.njk) CHECK(v == 0);
    for (auto v : f.nij) CHECK(v == 0);
  }
}

TEST_CASE("counts marginals are consistent on random data") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Dag g = test::random_dag(rng, 4, 0.5);
    Dataset d = test::random_dataset(rng, {2, 3, 2, 3}, 57);
    Counts c = counts(g, d);
    for (const auto& f : c.families) {
      std::int64_t total = 0;
      for (std::int64_t j = 0; j < f.q; ++j) {
        std::int64_t row = 0;
        for (int k = 0; k < f.r; ++k) row += f.njk[j * f.r + k];
        CHECK(row == f.nij[j]);
        total += f.nij[j];
      }
      CHECK(total == d.case_count());
    }
  }
}

TEST_CASE("dataset validation") {
  CHECK_THROWS_AS(Dataset({1, 2}, {}), InvalidArgumentError);
  CHECK_THROWS_AS(Dataset({2}, {{2}}), InvalidArgumentError);
  CHECK_THROWS_AS(Dataset({2}, {{-1}}), InvalidArgumentError);
  CHECK_THROWS_AS(Dataset({2, 2}, {{0}}), InvalidArgumentError);
}

TEST_CASE("log_ml") {
  CHECK(log_ml(make_dag(1, {}), single_binary(4, 4)).value ==
        doctest::Approx(8.0 * std::log(0.5)).epsilon(1e-12));

  // a single case has likelihood one under the MLE, for any structure
  Dataset one_case({2, 2}, {{0, 1}});
  CHECK(log_ml(make_dag(2, {{0, 1}}), one_case).value == doctest::Approx(0.0));
  CHECK(log_ml(make_dag(2, {}), one_case).value == doctest::Approx(0.0));

  // a constant column contributes nothing
  CHECK(log_ml(make_dag(1, {}), single_binary(5, 0)).value == doctest::Approx(0.0));
}

TEST_CASE("aic and bic") {
  Dataset d = single_binary(4, 4);
  Dag g = make_dag(1, {});
  double lml = 8.0 * std::log(0.5);
  CHECK(aic(g, d).value == doctest::Approx(lml - 1.0).epsilon(1e-12));
  CHECK(bic(g, d).value == doctest::Approx(lml - 0.5 * std::log(8.0)).epsilon(1e-12));

  Dataset empty({2}, {});
  CHECK(aic(g, empty).value == doctest::Approx(-1.0));
  CHECK_THROWS_AS(bic(g, empty), UndefinedForEmptyDataError);
}

TEST_CASE("bic is equal on equivalent structures") {
  std::mt19937_64 rng(21);
  Dataset d = test::random_dataset(rng, {2, 3, 2}, 40);
  double a = bic(make_dag(3, {{0, 1}, {1, 2}}), d).value;
  double b = bic(make_dag(3, {{1, 0}, {2, 1}}), d).value;
  CHECK(std::fabs(a - b) <= 1e-8 * std::max(1.0, std::fabs(a)));
}

TEST_CASE("mdl1 and mdl2") {
  std::mt19937_64 rng(22);
  Dataset d = test::random_dataset(rng, {2, 2, 3}, 30);
  PriorSpec prior;

  Dag chain = make_dag(3, {{0, 1}, {1, 2}});
  CHECK(mdl1(chain, d, prior).value == bic(chain, d).value);  // uniform prior

  Dag empty = make_dag(3, {});
  CHECK(mdl2(empty, d, prior).value ==
        doctest::Approx(log_ml(empty, d).value -
                        prior.mdl2_constant * static_cast<double>(dim(empty, d.cardinalities()))));

  double a = mdl2(chain, d, prior).value;
  double b = mdl2(make_dag(3, {{1, 0}, {2, 1}}), d, prior).value;
  CHECK(std::fabs(a - b) <= 1e-8 * std::max(1.0, std::fabs(a)));

  CHECK_THROWS_AS(mdl1(chain, Dataset({2, 2, 2}, {}), prior), UndefinedForEmptyDataError);
  CHECK_THROWS_AS(mdl2(chain, Dataset({2, 2, 2}, {}), prior), UndefinedForEmptyDataError);

  PriorSpec bad;
  bad.mdl2_constant = 0.0;
  CHECK_THROWS_AS(mdl2(chain, d, bad), InvalidArgumentError);
}

TEST_CASE("bde closed form on one binary observation") {
  PriorSpec prior;
  prior.equivalent_sample_size = 2.0;  // N' of 1 per cell
  double value = bde_log_likelihood(make_dag(1, {}), single_binary(1, 0), prior).value;
  CHECK(std::fabs(value - std::log(0.5)) < 1e-12);
}

TEST_CASE("bde of an empty dataset is zero") {
  PriorSpec prior;
  CHECK(bde_log_likelihood(make_dag(2, {{0, 1}}), Dataset({2, 2}, {}), prior).value == 0.0);
}

TEST_CASE("bde is likelihood equivalent and bayesian_score matches under uniform prior") {
  std::mt19937_64 rng(23);
  Dataset d = test::random_dataset(rng, {2, 3, 2}, 45);
  PriorSpec prior;

  Dag chain = make_dag(3, {{0, 1}, {1, 2}});
  Dag reversed = make_dag(3, {{1, 0}, {2, 1}});
  double a = bde_log_likelihood(chain, d, prior).value;
  double b = bde_log_likelihood(reversed, d, prior).value;
  CHECK(std::fabs(a - b) <= 1e-8 * std::max(1.0, std::fabs(a)));

  CHECK(bayesian_score(chain, d, prior).value == a);

  PriorSpec bad;
  bad.equivalent_sample_size = 0.0;
  CHECK_THROWS_AS(bde_log_likelihood(chain, d, bad), InvalidArgumentError);
}

TEST_CASE("bde decomposes into family terms; an edge touches only its head's family") {
  std::mt19937_64 rng(24);
  Dataset d = test::random_dataset(rng, {2, 2, 3, 2}, 60);
  PriorSpec prior;

  Dag g = make_dag(4, {{0, 1}, {1, 2}});
  double total = 0.0;
  for (int v = 0; v < 4; ++v) total += bde_family_log_likelihood(g, d, prior, v);
  CHECK(total == doctest::Approx(bde_log_likelihood(g, d, prior).value).epsilon(1e-12));

  Dag extended = make_dag(4, {{0, 1}, {1, 2}, {0, 3}});
  for (int v = 0; v < 3; ++v)
    CHECK(bde_family_log_likelihood(extended, d, prior, v) ==
          doctest::Approx(bde_family_log_likelihood(g, d, prior, v)).epsilon(1e-12));
  CHECK(bde_family_log_likelihood(extended, d, prior, 3) !=
        doctest::Approx(bde_family_log_likelihood(g, d, prior, 3)).epsilon(1e-12));
}

TEST_CASE("complete structures maximize log_ml at n=3") {
  std::mt19937_64 rng(25);
  Dataset d = test::random_dataset(rng, {2, 3, 2}, 50);

  double best = -1e300;
  std::vector<double> complete_scores;
  for (const Dag& g : enumerate_dags(3).all_dags) {
    double value = log_ml(g, d).value;
    best = std::max(best, value);
    if (g.edge_count() == 3) complete_scores.push_back(value);
  }
  REQUIRE(complete_scores.size() == 6);
  for (double s : complete_scores) CHECK(s == doctest::Approx(best).epsilon(1e-10));
}

TEST_CASE("dim is constant across 3-node equivalence classes") {
  DagUniverse u = enumerate_dags(3);
  for (const auto& cls : partition_classes(u)) {
    for (const auto& cards : {std::vector<int>{2, 2, 2}, std::vector<int>{2, 3, 2},
                              std::vector<int>{3, 3, 3}}) {
      std::int64_t expected = dim(cls.members.front(), cards);
      for (const Dag& m : cls.members) CHECK(dim(m, cards) == expected);
    }
  }
}
