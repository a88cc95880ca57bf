#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trop/commands.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw CLI::ValidationError(std::string(what) + ": bad integer '" + item + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError(std::string(what) + ": empty list");
  return out;
}

std::vector<trop::Strategy> parse_strategy_list(const std::string& s) {
  if (s == "all") return trop::Strategy::all();
  std::vector<trop::Strategy> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trop::Strategy::parse(item));
  if (out.empty()) throw trop::ParseError("empty strategy list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tropical varieties of zero-dimensional ideals given in shape position"};
  app.require_subcommand(1);
  int rc = 0;

  // trop
  std::string trop_input, trop_output = "-", trop_strategy = "overlap";
  bool trop_nomult = false;
  int trop_threads = 1;
  CLI::App* trop_cmd = app.add_subcommand("trop", "Compute the full tropical variety");
  trop_cmd->add_option("input", trop_input, "instance file")->required();
  trop_cmd->add_option("--strategy", trop_strategy,
                       "one-projection|sequential|regular-tree=K|overlap");
  trop_cmd->add_flag("--no-multiplicities", trop_nomult, "emit distinct points only");
  trop_cmd->add_option("--threads", trop_threads, "worker threads for glue batches");
  trop_cmd->add_option("--output", trop_output, "result file, - for stdout");
  trop_cmd->callback([&] {
    trop::Strategy s;
    try {
      s = trop::Strategy::parse(trop_strategy);
    } catch (const trop::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      rc = trop::kExitInvalidInput;
      return;
    }
    rc = trop::cmd_trop(trop_input, s, !trop_nomult, trop_threads, trop_output, std::cout,
                        std::cerr);
  });

  // project
  std::string proj_input, proj_output = "-", proj_coords;
  int proj_threads = 1;
  CLI::App* proj_cmd = app.add_subcommand("project", "Project the variety onto coordinates");
  proj_cmd->add_option("input", proj_input, "instance file")->required();
  proj_cmd->add_option("--coords", proj_coords, "comma-separated coordinate labels")->required();
  proj_cmd->add_option("--threads", proj_threads, "worker threads");
  proj_cmd->add_option("--output", proj_output, "result file, - for stdout");
  proj_cmd->callback([&] {
    rc = trop::cmd_project(proj_input, parse_int_list(proj_coords, "--coords"), proj_threads,
                           proj_output, std::cout, std::cerr);
  });

  // check
  std::string check_input;
  CLI::App* check_cmd = app.add_subcommand("check", "Validate an instance file");
  check_cmd->add_option("input", check_input, "instance file")->required();
  check_cmd->callback([&] { rc = trop::cmd_check(check_input, std::cout, std::cerr); });

  // generate
  int gen_d = 4, gen_n = 2;
  std::uint64_t gen_seed = 0, gen_prime = 2;
  std::string gen_output = "-";
  CLI::App* gen_cmd = app.add_subcommand("generate", "Generate a pseudo-random instance");
  gen_cmd->add_option("--degree", gen_d, "degree of f_n")->required();
  gen_cmd->add_option("--nvars", gen_n, "number of variables")->required();
  gen_cmd->add_option("--seed", gen_seed, "rng seed");
  gen_cmd->add_option("--prime", gen_prime, "valuation prime");
  gen_cmd->add_option("--output", gen_output, "instance file, - for stdout");
  gen_cmd->callback([&] {
    rc = trop::cmd_generate(gen_d, gen_n, gen_seed, gen_prime, gen_output, std::cout, std::cerr);
  });

  // bench
  std::string bench_d = "2,4", bench_n = "2,3", bench_strategies = "all", bench_output = "-";
  trop::BenchConfig bench_cfg;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Time strategies against each other");
  bench_cmd->add_option("--degrees", bench_d, "comma-separated degrees");
  bench_cmd->add_option("--nvars", bench_n, "comma-separated variable counts");
  bench_cmd->add_option("--strategies", bench_strategies, "all or a comma-separated list");
  bench_cmd->add_option("--reps", bench_cfg.reps, "instances per cell");
  bench_cmd->add_option("--seed", bench_cfg.seed, "rng seed");
  bench_cmd->add_option("--prime", bench_cfg.prime, "valuation prime");
  bench_cmd->add_option("--threads", bench_cfg.threads, "worker threads");
  bench_cmd->add_option("--output", bench_output, "csv file, - for stdout");
  bench_cmd->callback([&] {
    try {
      bench_cfg.degrees = parse_int_list(bench_d, "--degrees");
      bench_cfg.nvars = parse_int_list(bench_n, "--nvars");
      bench_cfg.strategies = parse_strategy_list(bench_strategies);
    } catch (const trop::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      rc = trop::kExitInvalidInput;
      return;
    }
    bench_cfg.output = bench_output;
    rc = trop::cmd_bench(bench_cfg, std::cout, std::cerr);
  });

  CLI11_PARSE(app, argc, argv);
  return rc;
}
