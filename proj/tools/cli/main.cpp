// Copyright 2026 The uqsd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitPropertyFailure = 2;

std::vector<std::size_t> parse_order_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long long value = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(value));
    } catch (const std::exception&) {
      throw uqsd::InvalidInput("--order expects a comma-separated list of party indices, got '" +
                               text + "'");
    }
  }
  return out;
}

void print(const uqsd::cli::Report& report) { std::cout << report.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal unambiguous discrimination of two product states by local protocols"};
  app.set_version_flag("--version", uqsd::cli::tool_version());
  app.require_subcommand(1);

  std::string scenario_path;
  std::string order_text;
  uqsd::cli::RunOptions run;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string engine;

  const auto add_scenario = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", scenario_path, "Scenario file (JSON)")->required();
  };
  const auto add_order = [&](CLI::App* cmd) {
    cmd->add_option("--order", order_text, "Visiting order, e.g. 2,0,1");
  };

  CLI::App* optimum = app.add_subcommand("optimum", "Global optimum for the scenario");
  add_scenario(optimum);

  CLI::App* protocol = app.add_subcommand("protocol", "Run the sequential local protocol");
  add_scenario(protocol);
  add_order(protocol);
  protocol->add_flag("--quiet", run.quiet, "Omit the per-step transcript");

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo execution of the protocol");
  add_scenario(simulate);
  add_order(simulate);
  CLI::Option* trials_opt = simulate->add_option("--trials", trials, "Number of trials");
  CLI::Option* sim_seed_opt = simulate->add_option("--seed", seed, "Root seed");
  CLI::Option* engine_opt =
      simulate->add_option("--engine", engine, "povm or neumark")->check(CLI::IsMember({"povm", "neumark"}));
  simulate->add_flag("--quiet", run.quiet, "Accepted for symmetry; reports carry no transcript");

  CLI::App* order = app.add_subcommand("order", "Compare visiting orders by expected measurements");
  add_scenario(order);
  order->add_flag("--exhaustive", run.exhaustive, "Require the exhaustive search");
  order->add_flag("--quiet", run.quiet, "Omit the table of all orders");

  uqsd::cli::VerifyOptions verify_options;
  CLI::App* verify = app.add_subcommand("verify", "Run the property suite on random instances");
  verify->add_option("--seed", verify_options.seed, "Root seed");
  verify->add_option("--count", verify_options.count, "Number of random instances");
  double tolerance = 0.0;
  CLI::Option* tol_opt =
      verify->add_option("--tolerance", tolerance, "Override every property tolerance");

  uqsd::cli::SweepGrid grid;
  bool csv = false;
  std::size_t grid_points = 0;
  CLI::App* sweep = app.add_subcommand("sweep", "Success probability surface over (c, r)");
  sweep->add_option("--c", grid.overlaps, "Global overlaps")->delimiter(',');
  sweep->add_option("--r", grid.priors_r, "Prior r values")->delimiter(',');
  sweep->add_option("--grid", grid_points, "Evenly spaced points on [0, 1] for unset axes");
  sweep->add_option("--parties", grid.parties, "Parties sharing the overlap");
  sweep->add_option("--seed", grid.seed, "Seed for the materialized states");
  sweep->add_flag("--csv", csv, "Emit CSV instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (!order_text.empty()) run.order = parse_order_list(order_text);
    if (*trials_opt) run.trials = trials;
    if (*sim_seed_opt) run.seed = seed;
    if (*engine_opt) run.engine = uqsd::cli::parse_engine(engine);

    if (optimum->parsed()) {
      print(uqsd::cli::cmd_optimum(uqsd::cli::load_scenario(scenario_path), run));
    } else if (protocol->parsed()) {
      print(uqsd::cli::cmd_protocol(uqsd::cli::load_scenario(scenario_path), run));
    } else if (simulate->parsed()) {
      print(uqsd::cli::cmd_simulate(uqsd::cli::load_scenario(scenario_path), run));
    } else if (order->parsed()) {
      print(uqsd::cli::cmd_order(uqsd::cli::load_scenario(scenario_path), run));
    } else if (verify->parsed()) {
      if (*tol_opt) verify_options.tolerance = tolerance;
      const uqsd::cli::VerifyOutcome outcome = uqsd::cli::cmd_verify(verify_options);
      print(outcome.report);
      return outcome.passed ? kExitOk : kExitPropertyFailure;
    } else if (sweep->parsed()) {
      if (grid_points > 0) {
        std::vector<double> axis;
        for (std::size_t k = 0; k < grid_points; ++k) {
          axis.push_back(grid_points == 1 ? 0.0
                                          : static_cast<double>(k) / static_cast<double>(grid_points - 1));
        }
        if (grid.overlaps.empty()) grid.overlaps = axis;
        if (grid.priors_r.empty()) grid.priors_r = axis;
      }
      if (csv) {
        std::cout << uqsd::cli::sweep_csv(grid);
      } else {
        print(uqsd::cli::cmd_sweep(grid));
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "uqsd: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
