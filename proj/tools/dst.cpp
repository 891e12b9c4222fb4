// dst: command-line front end for the distinguishing-number library.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dst/bounds.hpp"
#include "dst/corpus.hpp"
#include "dst/distinguish.hpp"
#include "dst/error.hpp"
#include "dst/graph.hpp"
#include "dst/group.hpp"
#include "dst/verify.hpp"

namespace
{

using nlohmann::ordered_json;
using namespace dst;

enum ExitCode { Success = 0, VerificationFailure = 1, InputError = 2 };

struct RunConfig
{
  std::uint64_t element_cap = default_element_cap;
  std::size_t subset_scan_max_degree = 30;
  std::size_t max_colors = 8;
  std::uint64_t max_colorings = 100'000'000;
  bool json = false;

  SearchBudget budget() const
  {
    return {element_cap, subset_scan_max_degree, max_colors, max_colorings};
  }
};

std::string read_file(std::string const &path)
{
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A path, or the name of a built-in group.
PermGroup open_group(std::string const &source)
{
  if (std::filesystem::exists(source))
    return load_group(read_file(source));
  if (auto entry = find_corpus_entry(source))
    return load_group(entry->text);
  throw Error(ErrorKind::MalformedInput,
              "no such file or built-in group: \"" + source + "\"");
}

Graph open_graph(std::string const &source)
{
  if (std::filesystem::is_regular_file(source))
    return parse_edge_list(read_file(source));
  return build_graph(source);
}

// Evaluates one report field; budget and precondition failures become a null
// value plus a note instead of aborting the report.
template<typename F>
void field(ordered_json &report, std::string const &key, F &&compute)
{
  try {
    report[key] = compute();
  } catch (Error const &e) {
    report[key] = nullptr;
    report["notes"][key] = std::string(to_string(e.kind())) + ": " + e.what();
  }
}

std::string text_value(ordered_json const &value)
{
  if (value.is_null())
    return "n/a";
  if (value.is_string())
    return value.get<std::string>();
  return value.dump();
}

void emit(ordered_json const &report, bool json)
{
  if (json) {
    std::cout << report.dump(2) << '\n';
    return;
  }
  for (auto const &[key, value] : report.items()) {
    if (key == "notes")
      continue;
    if (value.is_object()) {
      std::cout << key << ":\n";
      for (auto const &[k, v] : value.items())
        std::cout << "  " << k << ": " << text_value(v) << '\n';
    } else {
      std::cout << key << ": " << text_value(value) << '\n';
    }
  }
  if (report.contains("notes"))
    for (auto const &[k, v] : report["notes"].items())
      std::cout << "note (" << k << "): " << v.get<std::string>() << '\n';
}

std::string subset_text(std::vector<Point> const &subset)
{
  std::string out;
  for (Point x : subset)
    out += (out.empty() ? "" : " ") + std::to_string(x + 1);
  return out;
}

int cmd_group_report(std::string const &source, RunConfig const &config)
{
  PermGroup g = open_group(source);
  auto budget = config.budget();

  ordered_json report;
  report["degree"] = g.degree();
  report["order"] = g.order().get_str();
  report["transitive"] = is_transitive(g);
  report["primitive"] = is_primitive(g);
  field(report, "minimum_degree", [&] { return minimum_degree(g, budget.element_cap); });
  report["contains_alternating"] = contains_alternating(g);
  field(report, "distinguishing_number", [&] { return distinguishing_number(g, budget); });
  field(report, "lemma1_bound", [&]() -> ordered_json {
    auto r = lemma1_check(g, budget);
    return r.bound_ok;
  });
  field(report, "subset_orbits",
        [&] { return subset_orbit_count(g, budget.element_cap).get_str(); });
  emit(report, config.json);
  return Success;
}

int cmd_group_disting(std::string const &source, std::string const &partition_text,
                      RunConfig const &config)
{
  PermGroup g = open_group(source);
  auto budget = config.budget();

  ordered_json report;
  report["degree"] = g.degree();
  report["order"] = g.order().get_str();
  if (!partition_text.empty()) {
    auto partition = parse_partition(partition_text, g.degree());
    report["partition"] = format_partition(partition);
    report["cells"] = partition.cell_count();
    field(report, "distinguishing",
          [&] { return is_distinguishing(g, partition, budget.element_cap); });
  } else {
    field(report, "distinguishing_subset", [&]() -> ordered_json {
      auto subset = find_distinguishing_subset(g, budget);
      if (!subset)
        return "none";
      return subset_text(*subset);
    });
    field(report, "distinguishing_number", [&]() -> ordered_json {
      auto result = distinguishing_partition(g, budget);
      report["witness"] = format_partition(result.witness);
      return result.number;
    });
  }
  emit(report, config.json);
  return Success;
}

int cmd_graph_report(std::string const &source, RunConfig const &config)
{
  Graph x = open_graph(source);

  ordered_json report;
  report["vertices"] = x.vertex_count();
  report["edges"] = x.edge_count();
  std::optional<PermGroup> aut;
  field(report, "automorphism_order", [&] {
    aut = automorphism_group(x);
    return aut->order().get_str();
  });
  report["asymmetric"] = aut ? ordered_json(aut->order() == 1) : ordered_json(nullptr);
  if (aut)
    field(report, "distinguishing_number",
          [&] { return distinguishing_number(*aut, config.budget()); });
  else
    report["distinguishing_number"] = nullptr;
  emit(report, config.json);
  return Success;
}

ordered_json threshold_json(ThresholdReport const &r)
{
  ordered_json out;
  out["threshold"] = r.threshold;
  out["scan_limit"] = r.scan_limit;
  out["first_holding"] = r.first_holding;
  out["all_beyond_hold"] = r.all_beyond_hold;
  out["first_counterexample"] =
    r.first_counterexample ? ordered_json(*r.first_counterexample) : ordered_json(nullptr);
  return out;
}

int cmd_paper_verify(VerifyConfig const &verify, bool json)
{
  auto results = run_verification(verify);
  std::size_t failed = 0, skipped = 0;
  for (auto const &r : results) {
    failed += r.status == CheckStatus::Fail;
    skipped += r.status == CheckStatus::Skipped;
  }

  if (json) {
    ordered_json out;
    out["checks"] = ordered_json::array();
    for (auto const &r : results) {
      ordered_json c;
      c["id"] = r.id;
      c["title"] = r.title;
      c["status"] = to_string(r.status);
      c["detail"] = r.detail;
      c["seconds"] = r.seconds;
      out["checks"].push_back(c);
    }
    out["passed"] = results.size() - failed - skipped;
    out["failed"] = failed;
    out["skipped"] = skipped;
    std::cout << out.dump(2) << '\n';
  } else {
    for (auto const &r : results) {
      std::cout << std::left << std::setw(8)
                << (r.status == CheckStatus::Skipped ? "SKIPPED" : to_string(r.status))
                << std::setw(22) << r.id << std::right << std::fixed
                << std::setprecision(2) << std::setw(8) << r.seconds << "s  " << r.title
                << "\n        " << r.detail << '\n';
    }
    std::cout << results.size() - failed - skipped << " passed, " << failed
              << " failed, " << skipped << " skipped\n";
  }
  return failed ? VerificationFailure : Success;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Distinguishing numbers of permutation groups and graphs"};
  app.require_subcommand(1);

  RunConfig config;
  auto add_budget_options = [&](CLI::App *cmd) {
    cmd->add_flag("--json", config.json, "Emit JSON");
    cmd->add_option("--element-cap", config.element_cap, "Largest group order enumerated")
      ->check(CLI::PositiveNumber);
    cmd->add_option("--max-colors", config.max_colors, "Largest number of cells searched")
      ->check(CLI::PositiveNumber);
    cmd->add_option("--subset-scan-max-degree", config.subset_scan_max_degree,
                    "Largest degree for the 2^v subset scan")
      ->check(CLI::PositiveNumber);
    cmd->add_option("--max-colorings", config.max_colorings,
                    "Colorings tested per cell count")
      ->check(CLI::PositiveNumber);
  };

  auto *group = app.add_subcommand("group", "Permutation group queries");
  group->require_subcommand(1);

  std::string group_source;
  auto *group_report = group->add_subcommand("report", "Summarize a group file");
  group_report->add_option("file", group_source, "Group file or built-in group name")
    ->required();
  add_budget_options(group_report);

  std::string partition_text;
  auto *group_disting =
    group->add_subcommand("disting", "Check a partition or search for one");
  group_disting->add_option("file", group_source, "Group file or built-in group name")
    ->required();
  group_disting->add_option("--partition", partition_text,
                            "Cells as \"1 3 5; 2 4\"");
  add_budget_options(group_disting);

  auto *group_list = group->add_subcommand("list", "List built-in groups");

  auto *graph = app.add_subcommand("graph", "Graph queries");
  graph->require_subcommand(1);
  std::string graph_source;
  auto *graph_report = graph->add_subcommand("report", "Summarize a graph");
  graph_report->add_option("graph", graph_source, "Builder expression or edge-list file")
    ->required();
  add_budget_options(graph_report);

  std::string export_source;
  auto *graph_export = graph->add_subcommand("export", "Print a graph as an edge list");
  graph_export->add_option("graph", export_source, "Builder expression")->required();

  auto *bounds = app.add_subcommand("bounds", "Exact threshold scans");
  bounds->require_subcommand(1);
  std::uint64_t main_scan = default_main_scan;
  std::uint64_t babai_scan = default_babai_scan;
  bool bounds_json = false;
  auto *threshold = bounds->add_subcommand("threshold", "Scan the order-bound conflict");
  threshold->add_option("--scan", main_scan, "Scan limit")->check(CLI::Range(2ULL, 1ULL << 40));
  threshold->add_flag("--json", bounds_json, "Emit JSON");
  auto *babai = bounds->add_subcommand("babai", "Scan the minimum-degree variant");
  babai->add_option("--scan", babai_scan, "Scan limit")->check(CLI::Range(2ULL, 1ULL << 40));
  babai->add_flag("--json", bounds_json, "Emit JSON");

  auto *paper = app.add_subcommand("paper", "Reproduction suite");
  paper->require_subcommand(1);
  auto *verify = paper->add_subcommand("verify", "Run every desk-scale check");
  add_budget_options(verify);
  verify->add_option("--main-scan", main_scan, "Scan limit for the 336 threshold")
    ->check(CLI::Range(2ULL, 1ULL << 40));
  verify->add_option("--babai-scan", babai_scan, "Scan limit for the Babai threshold")
    ->check(CLI::Range(2ULL, 1ULL << 40));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? Success : InputError;
  }

  try {
    if (group_report->parsed())
      return cmd_group_report(group_source, config);
    if (group_disting->parsed())
      return cmd_group_disting(group_source, partition_text, config);
    if (group_list->parsed()) {
      for (auto const &entry : corpus())
        std::cout << entry.name << '\n';
      return Success;
    }
    if (graph_report->parsed())
      return cmd_graph_report(graph_source, config);
    if (graph_export->parsed()) {
      std::cout << format_edge_list(build_graph(export_source));
      return Success;
    }
    if (threshold->parsed() || babai->parsed()) {
      auto report = threshold->parsed() ? main_threshold(main_scan) : babai_threshold(babai_scan);
      emit(threshold_json(report), bounds_json);
      return Success;
    }
    if (verify->parsed()) {
      VerifyConfig vc;
      vc.budget = config.budget();
      vc.main_scan = main_scan;
      vc.babai_scan = babai_scan;
      return cmd_paper_verify(vc, config.json);
    }
  } catch (Error const &e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return InputError;
  }
  return InputError;
}
