// Command-line driver: ingest routing data, build per-origin announcement
// digraphs, quantify path diversity, and emit reports and DOT figures.
//
// Exit codes: 0 success, 2 unreadable input or bad configuration, 3 parse
// error in input data, 4 internal invariant breach.

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "pathdiv/pathdiv.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_parse = 3;
constexpr int exit_internal = 4;

struct cli_error {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cli_error{exit_usage, "cannot read " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw cli_error{exit_usage, "cannot read " + path};
  return std::move(buffer).str();
}

// Parse one input file, rewriting grammar errors as "<path>: line N: ...".
template <typename Parser>
auto parse_file(const std::string& path, Parser parser)
    -> decltype(parser(std::string_view{})) {
  const std::string text = read_file(path);
  try {
    return parser(std::string_view(text));
  } catch (const pathdiv::format_error& e) {
    throw cli_error{exit_parse, path + ": " + e.what()};
  }
}

// Stage files in a scratch directory next to the target and move them into
// place at the end, so a failed run leaves no partial output directory.
class output_stager {
public:
  explicit output_stager(fs::path target) : target_(std::move(target)) {
    if (fs::exists(target_) && !fs::is_directory(target_))
      throw cli_error{exit_usage, target_.string() + " exists and is not a directory"};
    std::error_code ec;
    const fs::path parent =
        target_.has_parent_path() ? target_.parent_path() : fs::path(".");
    fs::create_directories(parent, ec);
    std::random_device rd;
    staging_ = parent / (".stage-" + target_.filename().string() + "-" +
                         std::to_string(rd() % 1000000));
    if (!fs::create_directories(staging_, ec) || ec)
      throw cli_error{exit_usage, "cannot create staging directory under " +
                                      parent.string()};
  }

  ~output_stager() {
    if (!committed_) {
      std::error_code ec;
      fs::remove_all(staging_, ec);
    }
  }

  void add(const std::string& name, const std::string& content) {
    std::ofstream out(staging_ / name, std::ios::binary);
    out << content;
    if (!out) throw cli_error{exit_usage, "cannot write " + (staging_ / name).string()};
  }

  void commit() {
    std::error_code ec;
    if (!fs::exists(target_)) {
      fs::rename(staging_, target_, ec);
      if (ec) throw cli_error{exit_usage, "cannot move outputs into " + target_.string()};
    } else {
      for (const fs::directory_entry& entry : fs::directory_iterator(staging_)) {
        fs::rename(entry.path(), target_ / entry.path().filename(), ec);
        if (ec)
          throw cli_error{exit_usage, "cannot move outputs into " + target_.string()};
      }
      fs::remove_all(staging_, ec);
    }
    committed_ = true;
  }

private:
  fs::path target_;
  fs::path staging_;
  bool committed_ = false;
};

unsigned threads_from_env() {
  const unsigned fallback = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  const char* env = std::getenv("PATHDIV_THREADS");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || value < 1 || value > 256) {
    std::cerr << "warning: ignoring invalid PATHDIV_THREADS='" << env << "'\n";
    return fallback;
  }
  return static_cast<unsigned>(value);
}

struct analyze_options {
  std::string roster_path;
  std::vector<std::string> route_paths;
  std::vector<std::string> policy_paths;
  std::vector<std::string> trace_paths;
  std::string out_dir;
  std::string mode = "adp";
};

pathdiv::digraph_map load_and_merge(const analyze_options& opt, pathdiv::roster& ros) {
  ros = parse_file(opt.roster_path, [](std::string_view t) {
    return pathdiv::parse_roster(t);
  });
  std::vector<pathdiv::digraph_map> sources;
  for (const std::string& path : opt.route_paths) {
    const pathdiv::parsed_routes parsed =
        parse_file(path, [](std::string_view t) { return pathdiv::parse_routes(t); });
    if (parsed.dropped_loops > 0)
      std::cerr << "warning: " << path << ": dropped " << parsed.dropped_loops
                << " looped path(s)\n";
    sources.push_back(pathdiv::routes_to_digraphs(parsed.records, ros));
  }
  for (const std::string& path : opt.policy_paths) {
    const auto rules =
        parse_file(path, [](std::string_view t) { return pathdiv::parse_policies(t); });
    sources.push_back(pathdiv::policies_to_digraphs(rules, ros));
  }
  for (const std::string& path : opt.trace_paths) {
    const pathdiv::parsed_traces parsed =
        parse_file(path, [](std::string_view t) { return pathdiv::parse_traces(t); });
    if (parsed.dropped_loops > 0)
      std::cerr << "warning: " << path << ": dropped " << parsed.dropped_loops
                << " looped path(s)\n";
    sources.push_back(pathdiv::traces_to_digraphs(parsed.records, ros));
  }
  return pathdiv::merge_sources(sources);
}

std::string unreached_listing(const std::set<pathdiv::as_number>& unreached) {
  std::string text;
  for (pathdiv::as_number v : unreached) text += std::to_string(v.value()) + "\n";
  return text;
}

void add_metric_reports(output_stager& stage, const std::string& prefix,
                        const pathdiv::adp_matrix& matrix) {
  stage.add(prefix + "_matrix.csv", pathdiv::write_matrix_csv(matrix));
  std::vector<pathdiv::diversity_stats> rows;
  rows.reserve(matrix.roster().size());
  for (pathdiv::as_number origin : matrix.roster())
    rows.push_back(pathdiv::compute_stats(matrix, origin));
  stage.add(prefix + "_stats.csv", pathdiv::write_stats_csv(rows));
  stage.add(prefix + "_histogram.csv",
            pathdiv::write_histogram_csv(pathdiv::compute_histogram(matrix)));
}

int run_analyze(const analyze_options& opt) {
  pathdiv::roster ros;
  const pathdiv::digraph_map merged = load_and_merge(opt, ros);
  const unsigned threads = threads_from_env();

  const pathdiv::adp_matrix matrix = pathdiv::compute_adp_matrix(merged, threads);
  const pathdiv::histogram hist = pathdiv::compute_histogram(matrix);

  output_stager stage{fs::path(opt.out_dir)};
  for (const auto& [origin, ad] : merged)
    stage.add("announcement_" + std::to_string(origin.value()) + ".dot",
              pathdiv::to_dot(ad.graph(), origin));
  add_metric_reports(stage, "adp", matrix);
  if (opt.mode == "idp" || opt.mode == "all")
    add_metric_reports(stage, "idp", pathdiv::compute_idp_matrix(merged, threads));
  if (opt.mode == "ppr" || opt.mode == "all") {
    for (const auto& [origin, ad] : merged) {
      const pathdiv::bgp_digraph selected = pathdiv::select_bgp_digraph(ad);
      stage.add("bgp_" + std::to_string(origin.value()) + ".dot",
                pathdiv::to_dot(selected.graph, origin));
      stage.add("unreached_" + std::to_string(origin.value()) + ".txt",
                unreached_listing(selected.unreached));
    }
  }
  stage.commit();
  std::cout << "pairs with adp>1: " << pathdiv::diversity_excess(hist) << "\n";
  return exit_ok;
}

int run_ppr(const analyze_options& opt, std::uint32_t origin_value) {
  pathdiv::roster ros;
  const pathdiv::digraph_map merged = load_and_merge(opt, ros);
  if (origin_value == 0 || !ros.contains(pathdiv::as_number(origin_value)))
    throw cli_error{exit_usage,
                    "origin AS" + std::to_string(origin_value) + " is not on the roster"};
  const pathdiv::as_number origin(origin_value);

  const pathdiv::announcement_digraph& ad = merged.at(origin);
  const pathdiv::bgp_digraph selected = pathdiv::select_bgp_digraph(ad);

  output_stager stage{fs::path(opt.out_dir)};
  const std::string suffix = std::to_string(origin.value());
  stage.add("announcement_" + suffix + ".dot", pathdiv::to_dot(ad.graph(), origin));
  stage.add("bgp_" + suffix + ".dot", pathdiv::to_dot(selected.graph, origin));
  stage.add("unreached_" + suffix + ".txt", unreached_listing(selected.unreached));
  stage.commit();

  if (selected.unreached.empty()) {
    std::cout << "unreached: none\n";
  } else {
    std::cout << "unreached:";
    for (pathdiv::as_number v : selected.unreached) std::cout << " " << v.value();
    std::cout << "\n";
  }
  return exit_ok;
}

int run_gen(const pathdiv::syn_config& cfg, const std::string& out_dir) {
  pathdiv::syn_dataset data;
  try {
    data = pathdiv::generate(cfg);
  } catch (const std::invalid_argument& e) {
    throw cli_error{exit_usage, std::string("invalid generator config: ") + e.what()};
  }
  output_stager stage{fs::path(out_dir)};
  stage.add("roster.txt", data.roster_text);
  stage.add("policies.txt", data.policy_text);
  stage.add("routes.txt", data.routes_text);
  stage.commit();
  std::cout << "seed: " << cfg.seed << "\n";
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AS-level path diversity analysis"};
  app.require_subcommand(1);

  analyze_options analyze_opt;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Build announcement digraphs from routing data and report path diversity");
  analyze->add_option("--roster", analyze_opt.roster_path, "roster file (one AS per line)")
      ->required();
  analyze->add_option("--routes", analyze_opt.route_paths, "routing table file (repeatable)");
  analyze->add_option("--policies", analyze_opt.policy_paths, "policy file (repeatable)");
  analyze->add_option("--traces", analyze_opt.trace_paths, "trace file (repeatable)");
  analyze->add_option("--out", analyze_opt.out_dir, "output directory")->required();
  analyze->add_option("--mode", analyze_opt.mode, "adp | idp | ppr | all")
      ->check(CLI::IsMember({"adp", "idp", "ppr", "all"}));

  analyze_options ppr_opt;
  std::uint32_t ppr_origin = 0;
  CLI::App* ppr = app.add_subcommand(
      "ppr", "Emit one origin's announcement digraph and its selected BGP digraph");
  ppr->add_option("--roster", ppr_opt.roster_path, "roster file")->required();
  ppr->add_option("--routes", ppr_opt.route_paths, "routing table file (repeatable)");
  ppr->add_option("--policies", ppr_opt.policy_paths, "policy file (repeatable)");
  ppr->add_option("--traces", ppr_opt.trace_paths, "trace file (repeatable)");
  ppr->add_option("--out", ppr_opt.out_dir, "output directory")->required();
  ppr->add_option("--origin", ppr_origin, "origin AS number")->required();

  pathdiv::syn_config gen_cfg;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic policy-annotated topology");
  gen->add_option("--as-count", gen_cfg.as_count, "number of ASs (default 45)");
  gen->add_option("--provider-ratio", gen_cfg.provider_ratio,
                  "fraction of transit-eligible ASs (default 0.3)");
  gen->add_option("--peer-probability", gen_cfg.peer_probability,
                  "peering probability per pair (default 0.05)");
  gen->add_option("--seed", gen_cfg.seed, "random seed (default 0)");
  gen->add_option("--out", gen_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (analyze->parsed()) {
      if (analyze_opt.route_paths.empty() && analyze_opt.policy_paths.empty() &&
          analyze_opt.trace_paths.empty())
        throw cli_error{exit_usage, "at least one source file is required"};
      return run_analyze(analyze_opt);
    }
    if (ppr->parsed()) {
      if (ppr_opt.route_paths.empty() && ppr_opt.policy_paths.empty() &&
          ppr_opt.trace_paths.empty())
        throw cli_error{exit_usage, "at least one source file is required"};
      return run_ppr(ppr_opt, ppr_origin);
    }
    if (gen->parsed()) return run_gen(gen_cfg, gen_out);
    return exit_usage;
  } catch (const cli_error& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const pathdiv::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_parse;
  } catch (const pathdiv::format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_parse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}
