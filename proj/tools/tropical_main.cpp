#include "tropical/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

// bench takes `key=value` positionals (d=5 n=5 count=10 seed=1 ...).
int parse_bench_tokens(const std::vector<std::string>& tokens,
                       tropical::cli::BenchOptions& opts) {
  for (const std::string& tok : tokens) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << "expected key=value, got '" << tok << "'\n";
      return tropical::cli::kUsageError;
    }
    std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
    try {
      if (key == "d")
        opts.d = std::stoi(value);
      else if (key == "n")
        opts.n = std::stoi(value);
      else if (key == "count")
        opts.count = std::stoi(value);
      else if (key == "seed")
        opts.seed = std::stoull(value);
      else if (key == "density")
        opts.density = std::stod(value);
      else if (key == "lo")
        opts.coeff_lo = std::stol(value);
      else if (key == "hi")
        opts.coeff_hi = std::stol(value);
      else if (key == "label")
        opts.label = value;
      else {
        std::cerr << "unknown bench key '" << key << "'\n";
        return tropical::cli::kUsageError;
      }
    } catch (const std::logic_error&) {
      std::cerr << "malformed value in '" << tok << "'\n";
      return tropical::cli::kUsageError;
    }
  }
  return tropical::cli::kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extreme rays of tropical (max-plus) polyhedral cones"};
  app.require_subcommand(1);

  std::string input_path;
  tropical::cli::ExtremeOptions extreme_opts;
  auto* extreme = app.add_subcommand(
      "extreme", "Compute the extreme rays of an inequality system");
  extreme->add_option("input", input_path, "H-rep file")->required();
  extreme->add_option("--method", extreme_opts.method,
                      "hypergraph (default) or residuation");
  extreme->add_flag("--affine", extreme_opts.affine,
                    "treat the input as an affine system");
  extreme->add_flag("--stats", extreme_opts.stats,
                    "append the elimination trace");
  extreme->add_option("--jobs", extreme_opts.jobs,
                      "parallel extremality tests");

  std::string vector_literal;
  tropical::cli::CheckOptions check_opts;
  auto* check =
      app.add_subcommand("check", "Test a vector for extremality in a cone");
  check->add_option("input", input_path, "H-rep file")->required();
  check->add_option("vector", vector_literal, "vector literal, e.g. '2,2,0'")
      ->required();
  check->add_flag("--oracle", check_opts.oracle,
                  "cross-check with the enumeration oracle");

  tropical::cli::MinSccOptions minscc_opts;
  auto* minscc = app.add_subcommand(
      "minscc", "Minimal strongly connected components of a hypergraph");
  minscc->add_option("input", input_path, "hypergraph file")->required();
  minscc->add_flag("--oracle", minscc_opts.oracle,
                   "cross-check with the reachability oracle");

  bool bench_random = false;
  std::vector<std::string> bench_tokens;
  auto* bench = app.add_subcommand("bench", "Benchmark both pipelines (CSV)");
  bench->add_flag("--random", bench_random, "seeded random family");
  bench->add_option("params", bench_tokens,
                    "key=value settings: d n count seed density lo hi label");

  tropical::cli::BoundOptions bound_opts;
  auto* bound = app.add_subcommand(
      "bound", "Bound on the number of extreme rays (n inequalities, dim d)");
  bound->add_option("n", bound_opts.n, "inequality count")->required();
  bound->add_option("d", bound_opts.d, "dimension")->required();
  bound->add_flag("--raw", bound_opts.raw, "evaluate U(n, d) directly");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : tropical::cli::kUsageError;
  }

  if (extreme->parsed())
    return tropical::cli::cmd_extreme(input_path, extreme_opts, std::cout,
                                      std::cerr);
  if (check->parsed())
    return tropical::cli::cmd_check(input_path, vector_literal, check_opts,
                                    std::cout, std::cerr);
  if (minscc->parsed())
    return tropical::cli::cmd_minscc(input_path, minscc_opts, std::cout,
                                     std::cerr);
  if (bench->parsed()) {
    if (!bench_random) {
      std::cerr << "bench currently needs --random\n";
      return tropical::cli::kUsageError;
    }
    tropical::cli::BenchOptions opts;
    int rc = parse_bench_tokens(bench_tokens, opts);
    if (rc != tropical::cli::kOk) return rc;
    return tropical::cli::cmd_bench(opts, std::cout, std::cerr);
  }
  if (bound->parsed())
    return tropical::cli::cmd_bound(bound_opts, std::cout, std::cerr);
  return tropical::cli::kUsageError;
}
