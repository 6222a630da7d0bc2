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
#include "scenario.hpp"

#include <cmath>
#include <string>

#include "gtest/gtest.h"
#include "uqsd/random.hpp"
#include "uqsd/tolerances.hpp"

namespace uqsd::cli {
namespace {

std::string data_path(const char* name) { return std::string(UQSD_TEST_DATA_DIR) + "/" + name; }

std::string error_of(std::string_view text) {
  try {
    parse_scenario(text, "case.json");
  } catch (const ScenarioError& e) {
    return e.what();
  }
  return "";
}

TEST(ScenarioParse, abstract_fixture) {
  const Scenario s = load_scenario(data_path("bipartite.json"));
  EXPECT_EQ(s.r, 0.5);
  const auto& abstract = std::get<AbstractParties>(s.parties);
  EXPECT_EQ(abstract.overlaps, (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(abstract.seed, 3u);
  ASSERT_TRUE(s.simulation.has_value());
  EXPECT_EQ(s.simulation->trials, 200000u);
  EXPECT_FALSE(s.order.has_value());
}

TEST(ScenarioParse, explicit_fixture_materializes) {
  const Scenario s = load_scenario(data_path("explicit.json"));
  const ProductInstance instance = materialize(s);
  ASSERT_EQ(instance.size(), 2u);
  EXPECT_NEAR(instance.party(0).overlap(), 0.6, kNormTol);
  EXPECT_NEAR(instance.party(1).overlap(), 0.8, kNormTol);
  EXPECT_EQ(instance.party(1).dim(), 3u);
}

TEST(ScenarioParse, abstract_materializes_real_states) {
  const ProductInstance instance = materialize(load_scenario(data_path("tripartite.json")));
  for (const LocalPair& pair : instance.parties()) EXPECT_EQ(pair.dim(), 3u);
  EXPECT_NEAR(instance.party(0).overlap(), 0.9, kNormTol);
  EXPECT_NEAR(instance.party(2).overlap(), 0.2, kNormTol);
  EXPECT_EQ(resolve_order(load_scenario(data_path("tripartite.json"))), Order({2, 0, 1}));
}

TEST(ScenarioParse, errors_carry_context) {
  EXPECT_NE(error_of("{\"priors\": [0.5, 0.5],\n \"abstract\": {\"overlaps\": [0.5 0.2]}}")
                .find("case.json:2:"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"priors": [0.5, 0.5], "abstract": {"overlaps": [0.5, 1.5]}})")
                .find("abstract.overlaps[1]"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"priors": [0.5, 0.6], "abstract": {"overlaps": [0.5]}})").find("priors"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"priors": [0.5, 0.5]})").find("exactly one"), std::string::npos);
  EXPECT_NE(error_of(R"({"priors": [0.5, 0.5], "abstract": {"overlaps": [0.5]},
                         "explicit": {"parties": []}})")
                .find("exactly one"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"priors": [0.5, 0.5], "abstract": {"overlaps": [0.5]}, "colour": 1})")
                .find("colour"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"priors": [0.5, 0.5], "abstract": {"overlaps": [0.5, 0.1]},
                         "order": [0, 0]})")
                .find("order"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"priors": [0.5, 0.5],
                         "explicit": {"parties": [{"u": [[1, 0], [0, 0]], "v": [[1, 0]]}]}})")
                .find("explicit.parties[0].v"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"priors": [0.5, 0.5], "abstract": {"overlaps": [0.5]},
                         "simulation": {"engine": "magic"}})")
                .find("simulation.engine"),
            std::string::npos);
  EXPECT_THROW(load_scenario(data_path("missing.json")), ScenarioError);
}

TEST(ScenarioRoundTrip, fixtures) {
  for (const char* name : {"bipartite.json", "tripartite.json", "explicit.json"}) {
    const Scenario first = load_scenario(data_path(name));
    const Scenario second = parse_scenario(serialize(first));
    EXPECT_EQ(first, second) << name;
    EXPECT_EQ(serialize(first), serialize(second)) << name;
  }
}

// Random explicit instances survive serialize -> parse bit for bit.
TEST(ScenarioRoundTrip, random_instances) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Scenario s = scenario_from_instance(random_instance(1 + seed % 4, 2 + seed % 3, seed));
    if (seed % 2 == 0) s.order = Order::identity(s.party_count()).indices();
    if (seed % 3 == 0) s.simulation = SimulationSettings{seed + 1, seed, Engine::NeumarkEvolution};
    const Scenario back = parse_scenario(serialize(s));
    EXPECT_EQ(back, s);
    const ProductInstance a = materialize(s);
    const ProductInstance b = materialize(back);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.party(i).p(), b.party(i).p());
  }
}

}  // namespace
}  // namespace uqsd::cli
