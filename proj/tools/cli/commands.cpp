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
#include "commands.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "uqsd/locc.hpp"
#include "uqsd/montecarlo.hpp"
#include "uqsd/pair_disc.hpp"
#include "uqsd/random.hpp"
#include "uqsd/tolerances.hpp"

#ifndef UQSD_VERSION
#define UQSD_VERSION "0.0.0"
#endif

namespace uqsd::cli {
namespace {

Report envelope(const char* command, const Scenario& scenario) {
  Report out;
  out["tool"] = kToolName;
  out["version"] = tool_version();
  out["command"] = command;
  out["scenario"] = to_json(scenario);
  return out;
}

Report priors_json(const Priors& priors) { return Report::array({priors.r(), priors.s()}); }

Report strategy_json(const Strategy& strategy) {
  return {{"regime", std::string(to_string(strategy.regime))},
          {"fail_p", strategy.fail_p},
          {"fail_q", strategy.fail_q},
          {"p_success", strategy.p_success},
          {"p_fail", strategy.p_fail},
          {"swapped", strategy.swapped}};
}

Report step_json(const StepRecord& step) {
  return {{"party", step.party_index},
          {"p_reach", step.p_reach},
          {"priors_before", priors_json(step.priors_before)},
          {"local_overlap", step.local_overlap},
          {"regime", std::string(to_string(step.regime))},
          {"p_conclusive_given_reached", step.p_conclusive_given_reached},
          {"posterior_after_fail", priors_json(step.posterior_after_fail)},
          {"skipped", step.skipped}};
}

Report instance_json(const ProductInstance& instance) {
  Report parties = Report::array();
  for (std::size_t i = 0; i < instance.size(); ++i) {
    parties.push_back({{"index", i},
                       {"dim", instance.party(i).dim()},
                       {"overlap", instance.party(i).overlap()}});
  }
  return parties;
}

// (observed - expected) / stderr; null when the spread is zero and the
// values differ.
Report z_score(double observed, double expected, double stderr_value) {
  const double diff = observed - expected;
  if (stderr_value > 0.0) return diff / stderr_value;
  if (diff == 0.0) return 0.0;
  return nullptr;
}

}  // namespace

std::string tool_version() { return UQSD_VERSION; }

std::string format_number(double value) { return nlohmann::json(value).dump(); }

Scenario resolve(Scenario scenario, const RunOptions& options, bool with_simulation) {
  if (options.order) {
    if (options.order->size() != scenario.party_count()) {
      throw InvalidInput("--order length differs from the number of parties");
    }
    static_cast<void>(Order(*options.order));
    scenario.order = options.order;
  }
  if (!scenario.order) scenario.order = resolve_order(scenario).indices();
  if (with_simulation) {
    SimulationSettings sim = scenario.simulation.value_or(SimulationSettings{});
    if (options.trials) sim.trials = *options.trials;
    if (options.seed) sim.seed = *options.seed;
    if (options.engine) sim.engine = *options.engine;
    if (sim.trials < 1) throw InvalidInput("--trials must be >= 1");
    scenario.simulation = sim;
  }
  return scenario;
}

Report cmd_optimum(const Scenario& input, const RunOptions& options) {
  const Scenario scenario = resolve(input, options, false);
  const ProductInstance instance = materialize(scenario);
  const double c = global_overlap(instance);
  const Strategy strategy = optimal_strategy(c, instance.priors());

  Report out = envelope("optimum", scenario);
  out["parties"] = instance_json(instance);
  out["result"] = {{"global_overlap", c},
                   {"regime", std::string(to_string(strategy.regime))},
                   {"p_success", strategy.p_success},
                   {"strategy", strategy_json(strategy)}};
  return out;
}

Report cmd_protocol(const Scenario& input, const RunOptions& options) {
  const Scenario scenario = resolve(input, options, false);
  const ProductInstance instance = materialize(scenario);
  const Order order = resolve_order(scenario);
  const ProtocolResult run = run_protocol(instance, order);
  const double global = global_optimum(instance);

  Report out = envelope("protocol", scenario);
  out["parties"] = instance_json(instance);
  Report result = {{"order", order.indices()},
                   {"p_success", run.p_success},
                   {"p_inconclusive", run.p_inconclusive},
                   {"expected_measurements", run.expected_measurements},
                   {"global_optimum", global},
                   {"local_global_difference", std::abs(run.p_success - global)}};
  if (!options.quiet) {
    Report transcript = Report::array();
    for (const StepRecord& step : run.transcript) transcript.push_back(step_json(step));
    result["transcript"] = std::move(transcript);
  }
  out["result"] = std::move(result);
  return out;
}

Report cmd_simulate(const Scenario& input, const RunOptions& options) {
  const Scenario scenario = resolve(input, options, true);
  const ProductInstance instance = materialize(scenario);
  const Order order = resolve_order(scenario);
  const SimulationSettings& sim = *scenario.simulation;
  const ProtocolResult analytic = run_protocol(instance, order);
  const SimStats stats = simulate(instance, order, sim.trials, sim.seed, sim.engine);

  Report out = envelope("simulate", scenario);
  out["parties"] = instance_json(instance);
  out["result"] = {
      {"engine", std::string(to_string(sim.engine))},
      {"stats",
       {{"trials", stats.trials},
        {"successes", stats.successes},
        {"success_rate", stats.success_rate},
        {"success_stderr", stats.success_stderr},
        {"misidentifications", stats.misidentifications},
        {"mean_measurements", stats.mean_measurements},
        {"measurements_stderr", stats.measurements_stderr}}},
      {"analytic",
       {{"p_success", analytic.p_success},
        {"expected_measurements", analytic.expected_measurements}}},
      {"z_scores",
       {{"success", z_score(stats.success_rate, analytic.p_success, stats.success_stderr)},
        {"measurements", z_score(stats.mean_measurements, analytic.expected_measurements,
                                 stats.measurements_stderr)}}},
  };
  return out;
}

Report cmd_order(const Scenario& input, const RunOptions& options) {
  const Scenario scenario = resolve(input, options, false);
  const ProductInstance instance = materialize(scenario);
  if (options.exhaustive && instance.size() > kMaxExhaustiveParties) {
    throw InvalidInput("refusing exhaustive order search over " + std::to_string(instance.size()) +
                       " parties (limit " + std::to_string(kMaxExhaustiveParties) + ")");
  }
  const OrderChoice ascending = best_order(instance, OrderMode::AscendingOverlap);

  Report out = envelope("order", scenario);
  out["parties"] = instance_json(instance);
  Report result = {{"ascending",
                    {{"order", ascending.order.indices()},
                     {"expected_measurements", ascending.expected_measurements}}}};
  if (instance.size() <= kMaxExhaustiveParties) {
    const OrderChoice best = best_order(instance, OrderMode::Exhaustive);
    Report exhaustive = {{"order", best.order.indices()},
                         {"expected_measurements", best.expected_measurements},
                         {"ascending_is_optimal",
                          ascending.expected_measurements <= best.expected_measurements + kNormTol}};
    if (!options.quiet) {
      Report table = Report::array();
      for (const OrderEvaluation& entry : enumerate_orders(instance)) {
        table.push_back({{"order", entry.order.indices()},
                         {"expected_measurements", entry.expected_measurements},
                         {"p_success", entry.p_success}});
      }
      exhaustive["table"] = std::move(table);
    }
    result["exhaustive"] = std::move(exhaustive);
  } else {
    result["exhaustive"] = nullptr;
  }
  out["result"] = std::move(result);
  return out;
}

std::vector<SweepRow> sweep_rows(const SweepGrid& grid) {
  if (grid.overlaps.empty() || grid.priors_r.empty()) {
    throw InvalidInput("sweep grid is empty");
  }
  if (grid.parties < 1) throw InvalidInput("sweep needs at least one party");
  std::vector<SweepRow> rows;
  rows.reserve(grid.overlaps.size() * grid.priors_r.size());
  std::uint64_t index = 0;
  for (double r : grid.priors_r) {
    const Priors priors = Priors::from_r(r);
    for (double c : grid.overlaps) {
      if (!(c >= 0.0 && c <= 1.0)) throw InvalidInput("sweep overlaps must lie in [0, 1]");
      const Strategy global = optimal_strategy(c, priors);
      const double local_c = std::pow(c, 1.0 / static_cast<double>(grid.parties));
      std::vector<LocalPair> pairs;
      for (std::size_t k = 0; k < grid.parties; ++k) {
        pairs.push_back(state_pair_with_overlap(local_c, 2, derive_seed(grid.seed, index++)));
      }
      const ProductInstance instance(std::move(pairs), priors);
      const ProtocolResult run = run_protocol(instance, Order::identity(grid.parties));
      rows.push_back({c, r, global.regime, global.p_success, run.p_success,
                      run.expected_measurements});
    }
  }
  return rows;
}

Report cmd_sweep(const SweepGrid& grid) {
  Report out;
  out["tool"] = kToolName;
  out["version"] = tool_version();
  out["command"] = "sweep";
  out["scenario"] = {{"c", grid.overlaps},
                     {"r", grid.priors_r},
                     {"parties", grid.parties},
                     {"seed", grid.seed}};
  Report rows = Report::array();
  for (const SweepRow& row : sweep_rows(grid)) {
    rows.push_back({{"c", row.c},
                    {"r", row.r},
                    {"regime", std::string(to_string(row.regime))},
                    {"p_global", row.p_global},
                    {"p_locc", row.p_locc},
                    {"e_count", row.e_count}});
  }
  out["rows"] = std::move(rows);
  return out;
}

std::string sweep_csv(const SweepGrid& grid) {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& row : sweep_rows(grid)) {
    out << format_number(row.c) << ',' << format_number(row.r) << ',' << to_string(row.regime)
        << ',' << format_number(row.p_global) << ',' << format_number(row.p_locc) << ','
        << format_number(row.e_count) << '\n';
  }
  return out.str();
}

}  // namespace uqsd::cli
