#include "iwn/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "iwn/error.hpp"
#include "iwn/louvain.hpp"
#include "iwn/network.hpp"
#include "iwn/oracle.hpp"

namespace iwn::cli {

namespace {

using Json = nlohmann::ordered_json;

IngestResult load(const RunConfig& config) {
  const auto records = read_edge_csv_file(config.input);
  return config.undirected ? from_undirected(records, config.threshold)
                           : symmetrize(records, config.threshold);
}

std::string community_label(std::size_t c) { return fmt::format("C{}", c + 1); }

Json interval_json(const Interval& x) { return Json::array({x.lo(), x.hi()}); }

Json matrix_json(const IWNetwork& net) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < net.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < net.size(); ++j) row.push_back(interval_json(net.weight(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"labels", net.labels()}, {"weights", std::move(rows)}};
}

std::vector<std::vector<std::string>> final_communities(const LouvainRun& run,
                                                        const IWNetwork& original) {
  std::vector<std::vector<std::string>> out(run.final_partition.community_count());
  for (std::size_t c = 0; c < out.size(); ++c) {
    for (std::size_t v : run.final_partition.members(c)) out[c].push_back(original.label(v));
  }
  return out;
}

Json run_json(const LouvainRun& run, const IngestResult& input, bool with_trace) {
  const IWNetwork& original = input.network;
  Json membership = Json::array();
  for (std::size_t v = 0; v < original.size(); ++v) {
    membership.push_back({{"vertex", original.label(v)},
                          {"community", run.final_partition.community_of(v) + 1}});
  }
  Json passes = Json::array();
  for (std::size_t k = 0; k < run.passes.size(); ++k) {
    const Pass& p = run.passes[k];
    passes.push_back({{"pass", k + 1},
                      {"iterations", p.iterations.size()},
                      {"communities", p.partition.community_count()},
                      {"modularity", p.modularity},
                      {"changed", p.changed}});
  }
  Json doc;
  doc["method"] = std::string(to_string(run.method));
  doc["vertices"] = original.labels();
  doc["dropped"] = {{"self_loops", input.dropped_self_loops},
                    {"below_threshold", input.dropped_below_threshold}};
  doc["initial_modularity"] = run.initial_modularity;
  doc["membership"] = std::move(membership);
  doc["passes"] = std::move(passes);
  doc["final"] = {{"communities", final_communities(run, original)},
                  {"q", run.final_q},
                  {"q_norm", run.final_q_norm ? Json(*run.final_q_norm) : Json(nullptr)},
                  {"q_max", run.final_q_max}};
  doc["aggregated_matrix"] = matrix_json(run.final_network);
  if (with_trace) doc["trace"] = emit_trace(run);
  return doc;
}

std::string run_text(const LouvainRun& run, const IngestResult& input, bool with_trace) {
  const IWNetwork& original = input.network;
  std::string out;
  if (with_trace) {
    out += emit_trace(run);
    out += '\n';
  }
  out += "=== Summary ===\n";
  out += fmt::format("method: {}\n", to_string(run.method));
  out += fmt::format("vertices: {} (dropped self-loops: {}, below threshold: {})\n",
                     original.size(), input.dropped_self_loops, input.dropped_below_threshold);
  out += fmt::format("initial modularity: {:.3f}\n", run.initial_modularity);
  out += "membership:\n";
  for (std::size_t v = 0; v < original.size(); ++v) {
    out += fmt::format("  {} {}\n", original.label(v),
                       community_label(run.final_partition.community_of(v)));
  }
  out += "passes:\n";
  for (std::size_t k = 0; k < run.passes.size(); ++k) {
    const Pass& p = run.passes[k];
    out += fmt::format("  pass {}: iterations={} communities={} modularity={:.3f}{}\n", k + 1,
                       p.iterations.size(), p.partition.community_count(), p.modularity,
                       p.changed ? "" : " (no change)");
  }
  out += fmt::format("final: communities={} q={:.3f} q_norm={} q_max={:.6f}\n",
                     run.final_partition.community_count(), run.final_q,
                     run.final_q_norm ? fmt::format("{:.3f}", *run.final_q_norm) : "undefined",
                     run.final_q_max);
  const auto communities = final_communities(run, original);
  out += "communities:\n";
  for (std::size_t c = 0; c < communities.size(); ++c) {
    out += fmt::format("  {}: {}\n", community_label(c), fmt::join(communities[c], ", "));
  }
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < run.final_network.size(); ++c) labels.push_back(community_label(c));
  out += "aggregated interval adjacency matrix:\n";
  out += format_matrix(IWNetwork(std::move(labels),
                                 {run.final_network.weights().begin(),
                                  run.final_network.weights().end()}));
  return out;
}

int emit(const RunConfig& config, const std::string& text, std::ostream& out, std::ostream& err) {
  if (config.output.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file || !(file << text)) {
    err << fmt::format("error: cannot write '{}'\n", config.output);
    return kInputError;
  }
  return kOk;
}

template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_input_error(e.code()) ? kInputError : kAlgorithmError;
  }
}

}  // namespace

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const IngestResult input = load(config);
    const LouvainRun result = run(input.network, Strategy(config.method));
    const std::string text = config.format == Format::Json
                                 ? run_json(result, input, config.trace).dump(2) + "\n"
                                 : run_text(result, input, config.trace);
    return emit(config, text, out, err);
  });
}

int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const IngestResult input = load(config);
    const IWNetwork& net = input.network;
    const oracle::Report report = oracle::enumerate_best(net, config.method);
    std::vector<std::string> groups;
    std::vector<std::vector<std::string>> members(report.best_partition.community_count());
    for (std::size_t c = 0; c < members.size(); ++c) {
      for (std::size_t v : report.best_partition.members(c)) members[c].push_back(net.label(v));
      groups.push_back(fmt::format("{}", fmt::join(members[c], ",")));
    }
    std::string text;
    if (config.format == Format::Json) {
      Json doc;
      doc["metric"] = std::string(to_string(config.method));
      doc["vertices"] = net.labels();
      doc["partitions_evaluated"] = report.partitions_evaluated;
      doc["best_q"] = report.best_q;
      doc["best_partition"] = members;
      text = doc.dump(2) + "\n";
    } else {
      text = fmt::format(
          "metric: {}\nvertices: {}\npartitions_evaluated: {}\nbest_q: {:.6f}\n"
          "best_partition: {}\n",
          to_string(config.method), net.size(), report.partitions_evaluated, report.best_q,
          fmt::join(groups, " / "));
    }
    return emit(config, text, out, err);
  });
}

int main(int argc, char** argv) {
  CLI::App app{"Community detection in interval-weighted networks"};
  app.require_subcommand(1);

  RunConfig config;
  std::string method_name;
  std::string format_name = "text";
  const std::map<std::string, Method> methods{
      {"cl", Method::Classic}, {"hl", Method::Hybrid}, {"midpoint", Method::Midpoint}};
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", config.input, "Edge list CSV (src,dst,lo,hi)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_flag("--undirected", config.undirected, "Records are unordered pairs");
    sub->add_option("--min-weight", config.threshold, "Drop records whose hi is below this")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--format", format_name, "text | json")
        ->check(CLI::IsMember(formats, CLI::ignore_case));
    sub->add_option("--out", config.output, "Write output to this path");
  };

  auto* run_cmd = app.add_subcommand("run", "Run Louvain community detection");
  common(run_cmd);
  run_cmd->add_option("--method", method_name, "cl | hl | midpoint")
      ->required()
      ->check(CLI::IsMember(methods, CLI::ignore_case));
  run_cmd->add_flag("--trace", config.trace, "Include the step-by-step trace");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive modularity maximisation (n <= 12)");
  common(oracle_cmd);
  oracle_cmd->add_option("--metric", method_name, "cl | hl | midpoint")
      ->required()
      ->check(CLI::IsMember(methods, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  config.method = methods.at(method_name);
  config.format = formats.at(format_name);
  if (run_cmd->parsed()) return cmd_run(config, std::cout, std::cerr);
  return cmd_oracle(config, std::cout, std::cerr);
}

}  // namespace iwn::cli
