// Command-line front end: every library capability over text files, with
// human-readable and JSON output. Identical inputs produce byte-identical
// output; all iteration orders below are explicitly sorted.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mec/compelled.hpp"
#include "mec/dag.hpp"
#include "mec/dataset_csv.hpp"
#include "mec/graph_text.hpp"
#include "mec/oracle.hpp"
#include "mec/scoring.hpp"
#include "mec/transform.hpp"

using nlohmann::ordered_json;

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string render_edge(const mec::Dag& g, mec::Edge e) {
  return g.name_of(e.tail) + " -> " + g.name_of(e.head);
}

ordered_json run_check_equiv(const std::string& first, const std::string& second, bool json) {
  mec::Dag a = mec::parse_graph_file(first);
  mec::Dag b = mec::align_to_names(a.names(), mec::parse_graph_file(second));

  auto reason = mec::inequivalence_reason(a, b);
  if (!json)
    std::cout << (reason ? "not equivalent: " + *reason : std::string("equivalent")) << "\n";

  ordered_json result;
  result["equivalent"] = !reason.has_value();
  result["reason"] = reason ? ordered_json(*reason) : ordered_json(nullptr);
  return result;
}

ordered_json run_compelled(const std::string& path, bool json) {
  mec::Dag g = mec::parse_graph_file(path);
  auto labels = mec::find_compelled(g);

  ordered_json edges = ordered_json::array();
  for (const mec::Edge& e : g.edges()) {
    std::string label = mec::to_string(labels.at(e));
    if (!json) std::cout << render_edge(g, e) << "  " << label << "\n";
    edges.push_back({{"tail", g.name_of(e.tail)}, {"head", g.name_of(e.head)}, {"label", label}});
  }
  return ordered_json{{"edges", edges}};
}

ordered_json run_cpdag(const std::string& path, bool minimal, bool json) {
  mec::Dag g = mec::parse_graph_file(path);
  mec::Pdag p = minimal ? mec::to_minimal_pdag(g) : mec::to_completed_pdag(g);

  if (!json) std::cout << mec::write_pdag_text(p);

  ordered_json edges = ordered_json::array();
  for (const mec::PdagEdge& e : p.edges())
    edges.push_back({{"tail", g.name_of(e.tail)},
                     {"head", g.name_of(e.head)},
                     {"directed", e.directed}});
  ordered_json nodes = ordered_json::array();
  for (int v = 0; v < g.node_count(); ++v) nodes.push_back(g.name_of(v));
  return ordered_json{{"kind", mec::to_string(p.kind())}, {"nodes", nodes}, {"edges", edges}};
}

ordered_json run_transform_seq(const std::string& first, const std::string& second, bool json) {
  mec::Dag a = mec::parse_graph_file(first);
  mec::Dag b = mec::align_to_names(a.names(), mec::parse_graph_file(second));

  mec::TransformSequence seq = mec::build_sequence(a, b);
  ordered_json steps = ordered_json::array();
  for (int k = 0; k < seq.length(); ++k) {
    if (!json) std::cout << "reverse " << render_edge(a, seq.edges[k]) << "\n";
    steps.push_back({{"step", k}, {"edge", render_edge(a, seq.edges[k])}, {"covered", true}});
  }
  return ordered_json{{"count", seq.length()}, {"steps", steps}};
}

ordered_json run_score(const std::string& graph_path, const std::string& data_path,
                       const std::string& metric, double ess, double mdl2_c, bool json) {
  mec::Dataset d = mec::parse_dataset_file(data_path, &std::cerr);
  mec::Dag g = mec::align_to_names(d.names(), mec::parse_graph_file(graph_path));
  mec::PriorSpec prior;
  prior.equivalent_sample_size = ess;
  prior.mdl2_constant = mdl2_c;

  mec::ScoreValue score;
  if (metric == "ml")
    score = mec::log_ml(g, d);
  else if (metric == "aic")
    score = mec::aic(g, d);
  else if (metric == "bic")
    score = mec::bic(g, d);
  else if (metric == "mdl1")
    score = mec::mdl1(g, d, prior);
  else if (metric == "mdl2")
    score = mec::mdl2(g, d, prior);
  else
    score = mec::bde_log_likelihood(g, d, prior);

  if (!json) std::cout << metric << " " << format_double(score.value) << "\n";

  ordered_json result{{"metric", metric}, {"value", score.value}};
  if (metric == "bde") result["equivalent_sample_size"] = ess;
  if (metric == "mdl2") result["mdl2_constant"] = mdl2_c;
  return result;
}

ordered_json run_enumerate(int n, bool stats, bool json) {
  mec::DagUniverse u = mec::enumerate_dags(n);
  auto classes = mec::partition_classes(u);

  if (!json)
    std::cout << "n=" << n << ": " << u.all_dags.size() << " dags, " << classes.size()
              << " equivalence classes\n";

  ordered_json result{{"n", n},
                      {"dag_count", u.all_dags.size()},
                      {"class_count", classes.size()}};
  if (stats) {
    // Dim column uses all-binary variables; see --help.
    std::vector<int> cards(n, 2);
    auto rows = mec::class_statistics(u, cards);
    if (!json) std::cout << "class  size  edges  compelled  dim  parent-sizes\n";
    ordered_json out_rows = ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      std::string sizes;
      for (std::size_t k = 0; k < row.parent_size_multiset.size(); ++k)
        sizes += (k ? "," : "") + std::to_string(row.parent_size_multiset[k]);
      if (!json)
        std::cout << i << "  " << row.size << "  " << row.edge_count << "  "
                  << row.compelled_count << "  " << row.dim << "  " << sizes << "\n";
      out_rows.push_back({{"class", i},
                          {"size", row.size},
                          {"edges", row.edge_count},
                          {"compelled", row.compelled_count},
                          {"dim", row.dim},
                          {"parent_sizes", row.parent_size_multiset}});
    }
    result["classes"] = out_rows;
  }
  return result;
}

int resolve_variable(const mec::Dataset& d, const std::string& token) {
  for (int v = 0; v < d.variable_count(); ++v)
    if (d.name_of(v) == token) return v;
  throw mec::InvalidArgumentError("'" + token + "' is not a dataset variable");
}

ordered_json run_posterior(int graph_nodes, const std::string& data_path,
                           const std::vector<std::string>& edge,
                           const std::string& interpretation, double ess, bool json) {
  mec::Dataset d = mec::parse_dataset_file(data_path, &std::cerr);
  if (graph_nodes != d.variable_count())
    throw mec::InvalidArgumentError("--graph-nodes " + std::to_string(graph_nodes) +
                                    " does not match the dataset's " +
                                    std::to_string(d.variable_count()) + " variables");

  mec::CausalStatement s{resolve_variable(d, edge[0]), resolve_variable(d, edge[1])};
  mec::PriorSpec prior;
  prior.equivalent_sample_size = ess;

  bool acausal = interpretation == "acausal";
  double prob = mec::causal_edge_posterior(
      s, d, prior,
      acausal ? mec::CausalInterpretation::Acausal : mec::CausalInterpretation::Causal);

  const char* note =
      "reversible-edge terms use the within-class edge fraction as p(s|structure)";
  if (!json) {
    std::cout << "p(" << edge[0] << " causes " << edge[1]
              << " | data) = " << format_double(prob) << "\n";
    if (acausal) std::cout << "note: " << note << "\n";
  }

  ordered_json result{{"tail", edge[0]},
                      {"head", edge[1]},
                      {"interpretation", interpretation},
                      {"probability", prob}};
  if (acausal) result["note"] = note;
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markov equivalence tools for Bayesian-network structures"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit a single JSON object instead of text");

  std::string ce_first, ce_second;
  auto* check = app.add_subcommand("check-equiv", "test two DAGs for Markov equivalence");
  check->add_option("first", ce_first, "graph file")->required();
  check->add_option("second", ce_second, "graph file")->required();

  std::string co_graph;
  auto* comp = app.add_subcommand("compelled", "label every edge compelled or reversible");
  comp->add_option("graph", co_graph, "graph file")->required();

  std::string cp_graph;
  bool cp_minimal = false;
  auto* cpdag = app.add_subcommand("cpdag", "emit the completed PDAG of the equivalence class");
  cpdag->add_option("graph", cp_graph, "graph file")->required();
  cpdag->add_flag("--minimal", cp_minimal, "emit the minimal PDAG instead");

  std::string ts_first, ts_second;
  auto* tseq = app.add_subcommand("transform-seq",
                                  "covered-edge reversal sequence between equivalent DAGs");
  tseq->add_option("first", ts_first, "start graph file")->required();
  tseq->add_option("second", ts_second, "target graph file")->required();

  std::string sc_graph, sc_data, sc_metric = "bic";
  double sc_ess = 1.0;
  double sc_mdl2_c = mec::PriorSpec::kDefaultMdl2Constant;
  auto* score = app.add_subcommand("score", "score a structure against a discrete dataset");
  score->add_option("graph", sc_graph, "graph file")->required();
  score->add_option("--data", sc_data, "CSV dataset (header name:cardinality)")->required();
  score->add_option("--metric", sc_metric, "scoring metric")
      ->check(CLI::IsMember({"ml", "aic", "bic", "mdl1", "mdl2", "bde"}));
  score->add_option("--ess", sc_ess, "equivalent sample size for bde");
  score->add_option("--mdl2-c", sc_mdl2_c, "per-parameter cost for mdl2 (natural-log units)");

  int en_n = 0;
  bool en_stats = false;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate all DAGs on n nodes (n <= 5)");
  enumerate->add_option("--n", en_n, "node count")->required();
  enumerate->add_flag("--stats", en_stats,
                      "per-class size/edges/compelled/dim table (dim assumes binary variables)");

  int po_nodes = 0;
  std::string po_data, po_interp = "causal";
  std::vector<std::string> po_edge;
  double po_ess = 1.0;
  auto* posterior =
      app.add_subcommand("posterior", "exact posterior of a direct-cause statement (n <= 4)");
  posterior->add_option("--graph-nodes", po_nodes, "number of variables")->required();
  posterior->add_option("--data", po_data, "CSV dataset")->required();
  posterior->add_option("--edge", po_edge, "tail and head variable")->expected(2)->required();
  posterior->add_option("--interpretation", po_interp, "causal or acausal")
      ->check(CLI::IsMember({"causal", "acausal"}));
  posterior->add_option("--ess", po_ess, "equivalent sample size");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  ordered_json result;
  try {
    if (check->parsed())
      result = run_check_equiv(ce_first, ce_second, json);
    else if (comp->parsed())
      result = run_compelled(co_graph, json);
    else if (cpdag->parsed())
      result = run_cpdag(cp_graph, cp_minimal, json);
    else if (tseq->parsed())
      result = run_transform_seq(ts_first, ts_second, json);
    else if (score->parsed())
      result = run_score(sc_graph, sc_data, sc_metric, sc_ess, sc_mdl2_c, json);
    else if (enumerate->parsed())
      result = run_enumerate(en_n, en_stats, json);
    else
      result = run_posterior(po_nodes, po_data, po_edge, po_interp, po_ess, json);
  } catch (const std::exception& e) {
    if (json) {
      ordered_json envelope{{"command", command},
                            {"status", "error"},
                            {"result", nullptr},
                            {"error", {{"message", e.what()}}}};
      std::cout << envelope.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 1;
  }

  if (json) {
    ordered_json envelope{
        {"command", command}, {"status", "ok"}, {"result", result}, {"error", nullptr}};
    std::cout << envelope.dump(2) << "\n";
  }
  return 0;
}
