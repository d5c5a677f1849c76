// Command-line driver: verify the K4 closed form, run cover searches, count
// colourings of explicit or constructed covers, signed-graph counts and
// the K_n bound window.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "dpcover/commands.hpp"

using namespace dpcover;

namespace {

const std::map<std::string, OutputFormat> kFormats{
    {"json", OutputFormat::kJson}, {"table", OutputFormat::kTable}, {"csv", OutputFormat::kCsv}};

void add_format(CLI::App* app, OutputFormat& format) {
  app->add_option("--format", format, "Output format: json, table or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual DP colour functions of small graphs via full-cover enumeration"};
  app.require_subcommand(1);
  OutputFormat format = OutputFormat::kJson;
  CommandOutcome outcome;

  VerifyK4Options verify;
  auto* verify_cmd = app.add_subcommand("verify-k4", "Check the K4 closed form for m = 2..m-max");
  verify_cmd->add_option("--m-max", verify.m_max, "Largest fold number")->required();
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = all cores)");
  verify_cmd->add_option("--budget", verify.budget, "Maximum covers per exhaustive search");
  add_format(verify_cmd, format);
  verify_cmd->callback([&] { outcome = cmd_verify_k4(verify); });

  SearchOptions search;
  std::string normalize = "star";
  std::string reduce = "none";
  std::string counter = "default";
  std::uint64_t samples = 0;
  std::uint64_t search_seed = 0;
  auto* search_cmd = app.add_subcommand("search", "Extremal search over full m-fold covers");
  search_cmd->add_option("--graph", search.graph, "Built-in K2..K8 or graph JSON file");
  search_cmd->add_option("--m", search.m, "Fold number")->required();
  search_cmd->add_option("--mode", search.mode, "max, min or both")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, SearchMode>{
              {"max", SearchMode::kMax}, {"min", SearchMode::kMin}, {"both", SearchMode::kBoth}},
          CLI::ignore_case));
  search_cmd->add_option("--normalize", normalize, "star or none")
      ->check(CLI::IsMember({"star", "none"}));
  search_cmd->add_option("--root", search.root, "Star root vertex (1-indexed)");
  search_cmd->add_option("--reduce", reduce, "conjugacy or none")
      ->check(CLI::IsMember({"conjugacy", "none"}));
  search_cmd->add_option("--counter", counter, "default, brute, ie or k4")
      ->check(CLI::IsMember({"default", "brute", "ie", "k4"}));
  search_cmd->add_option("--budget", search.budget, "Maximum covers to evaluate");
  search_cmd->add_option("--threads", search.threads, "Worker threads (0 = all cores)");
  auto* samples_opt = search_cmd->add_option("--samples", samples, "Random covers instead of exhaustive");
  auto* seed_opt = search_cmd->add_option("--seed", search_seed, "Seed for sampled mode");
  search_cmd->add_flag("--histogram", search.histogram, "Report value frequencies");
  add_format(search_cmd, format);
  search_cmd->callback([&] {
    search.normalization = normalize == "star" ? Normalization::kStar : Normalization::kNone;
    search.reduction = reduce == "conjugacy" ? Reduction::kConjugacy : Reduction::kNone;
    if (counter == "brute") search.counter = CounterKind::kBrute;
    if (counter == "ie") search.counter = CounterKind::kInclusionExclusion;
    if (counter == "k4") search.counter = CounterKind::kK4Identity;
    if (samples_opt->count() > 0) search.samples = samples;
    if (seed_opt->count() > 0) search.seed = search_seed;
    outcome = cmd_search(search);
  });

  CountOptions count;
  std::string cover_file;
  std::string count_graph;
  std::string construct;
  std::uint64_t count_seed = 0;
  auto* count_cmd = app.add_subcommand("count", "Count colourings of one cover");
  auto* cover_opt = count_cmd->add_option("--cover", cover_file, "Cover JSON file");
  auto* cgraph_opt = count_cmd->add_option("--graph", count_graph, "Graph for the cover file");
  auto* construct_opt = count_cmd->add_option(
      "--construct", construct, "canonical, even-pairing, odd-k4, odd-complete or random");
  count_cmd->add_option("--n", count.n, "Order of the constructed complete graph");
  count_cmd->add_option("--m", count.m, "Fold number of the construction");
  auto* cseed_opt = count_cmd->add_option("--seed", count_seed, "Seed for random construction");
  count_cmd->add_option("--counter", count.counter, "default, brute, ie, k4 or all");
  count_cmd->add_flag_callback("--all", [&] { count.counter = "all"; }, "Run every applicable counter");
  add_format(count_cmd, format);
  count_cmd->callback([&] {
    if (cover_opt->count() > 0) count.cover_file = cover_file;
    if (cgraph_opt->count() > 0) count.graph = count_graph;
    if (construct_opt->count() > 0) count.construct = construct;
    if (cseed_opt->count() > 0) count.seed = count_seed;
    outcome = cmd_count(count);
  });

  SignedOptions signed_opts;
  std::string signed_graph;
  auto* signed_cmd = app.add_subcommand("signed", "Proper lambda-colourings of a signed graph");
  signed_cmd->add_option("--n", signed_opts.n, "Order of the all-negative complete graph");
  signed_cmd->add_option("--lambda", signed_opts.lambda, "Number of colours")->required();
  auto* sgraph_opt = signed_cmd->add_option("--graph", signed_graph, "Signed graph JSON file");
  signed_cmd->add_flag("--compare-dual", signed_opts.compare_dual,
                       "Compare with the K4 dual value (n = 4, even lambda)");
  add_format(signed_cmd, format);
  signed_cmd->callback([&] {
    if (sgraph_opt->count() > 0) signed_opts.graph = signed_graph;
    outcome = cmd_signed(signed_opts);
  });

  BoundsOptions bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Bound window for K_n at fold m");
  bounds_cmd->add_option("--n", bounds.n, "Order n >= 4")->required();
  bounds_cmd->add_option("--m", bounds.m, "Fold number")->required();
  bounds_cmd->add_flag("--check-construction", bounds.check_construction,
                       "Count the extremal construction and test it against the window");
  add_format(bounds_cmd, format);
  bounds_cmd->callback([&] { outcome = cmd_bounds(bounds); });

  ConstructOptions cons;
  std::uint64_t cons_seed = 0;
  auto* cons_cmd = app.add_subcommand("construct", "Emit a construction as a cover JSON object");
  cons_cmd->add_option("--kind", cons.kind,
                       "canonical, even-pairing, odd-k4, odd-complete or random");
  cons_cmd->add_option("--n", cons.n, "Order of the complete graph");
  cons_cmd->add_option("--m", cons.m, "Fold number")->required();
  auto* kseed_opt = cons_cmd->add_option("--seed", cons_seed, "Seed for the random kind");
  add_format(cons_cmd, format);
  cons_cmd->callback([&] {
    if (kseed_opt->count() > 0) cons.seed = cons_seed;
    outcome = cmd_construct(cons);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::cout << render(outcome, format);
  if (!outcome.ok) std::cerr << outcome.error_code << ": " << outcome.error_message << "\n";
  return outcome.exit_code;
}
