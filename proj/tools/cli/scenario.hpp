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
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "uqsd/errors.hpp"
#include "uqsd/locc.hpp"
#include "uqsd/montecarlo.hpp"
#include "uqsd/states.hpp"

namespace uqsd::cli {

/// Malformed scenario document. The message carries the source name and a
/// line:column position or the offending field path.
class ScenarioError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Parties given only by their overlaps. Materialized as explicit pairs of
/// the given dimension before anything runs.
struct AbstractParties {
  std::vector<double> overlaps;
  std::size_t dim = 2;
  std::uint64_t seed = 0;

  friend bool operator==(const AbstractParties&, const AbstractParties&) = default;
};

struct ExplicitParty {
  std::vector<Complex> u;
  std::vector<Complex> v;

  friend bool operator==(const ExplicitParty&, const ExplicitParty&) = default;
};

struct ExplicitParties {
  std::vector<ExplicitParty> parties;

  friend bool operator==(const ExplicitParties&, const ExplicitParties&) = default;
};

struct SimulationSettings {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  Engine engine = Engine::PovmSampling;

  friend bool operator==(const SimulationSettings&, const SimulationSettings&) = default;
};

struct Scenario {
  double r = 0.5;
  double s = 0.5;
  std::variant<AbstractParties, ExplicitParties> parties;
  std::optional<std::vector<std::size_t>> order;
  std::optional<SimulationSettings> simulation;

  std::size_t party_count() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Parses a scenario document. `source` names the input in error messages.
Scenario parse_scenario(std::string_view text, std::string_view source = "<scenario>");
Scenario load_scenario(const std::string& path);

nlohmann::ordered_json to_json(const Scenario& scenario);
std::string serialize(const Scenario& scenario);

/// Scenario holding the explicit amplitudes of an instance.
Scenario scenario_from_instance(const ProductInstance& instance);

ProductInstance materialize(const Scenario& scenario);

/// The scenario's order, or the identity when none is given.
Order resolve_order(const Scenario& scenario);

Engine parse_engine(std::string_view name);

}  // namespace uqsd::cli
