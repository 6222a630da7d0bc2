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
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "scenario.hpp"

namespace uqsd::cli {

using Report = nlohmann::ordered_json;

inline constexpr const char* kToolName = "uqsd";
std::string tool_version();

/// Overrides applied on top of a scenario file by command-line flags.
struct RunOptions {
  std::optional<std::vector<std::size_t>> order;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<Engine> engine;
  bool exhaustive = false;
  bool quiet = false;
};

/// Scenario with flag overrides folded in (order, simulation settings).
Scenario resolve(Scenario scenario, const RunOptions& options, bool with_simulation);

Report cmd_optimum(const Scenario& scenario, const RunOptions& options);
Report cmd_protocol(const Scenario& scenario, const RunOptions& options);
Report cmd_simulate(const Scenario& scenario, const RunOptions& options);
Report cmd_order(const Scenario& scenario, const RunOptions& options);

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::uint64_t count = 100;
  // Replaces every property tolerance when set.
  std::optional<double> tolerance;
};

struct VerifyOutcome {
  Report report;
  bool passed = false;
};

/// Property suite over `count` random instances derived from `seed`.
VerifyOutcome cmd_verify(const VerifyOptions& options);

struct SweepGrid {
  std::vector<double> overlaps;
  std::vector<double> priors_r;
  // The global overlap c is split evenly over this many parties.
  std::size_t parties = 2;
  std::uint64_t seed = 0;
};

struct SweepRow {
  double c;
  double r;
  Regime regime;
  double p_global;
  double p_locc;
  double e_count;
};

std::vector<SweepRow> sweep_rows(const SweepGrid& grid);
Report cmd_sweep(const SweepGrid& grid);
inline constexpr const char* kSweepCsvHeader = "c,r,regime,p_global,p_locc,e_count";
std::string sweep_csv(const SweepGrid& grid);

/// Shortest decimal form that round-trips the double.
std::string format_number(double value);

}  // namespace uqsd::cli
