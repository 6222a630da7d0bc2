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
#include <string_view>
#include <variant>
#include <vector>

#include "uqsd/locc.hpp"
#include "uqsd/pair_disc.hpp"
#include "uqsd/random.hpp"

namespace uqsd {

enum class Engine { PovmSampling, NeumarkEvolution };
enum class Hypothesis { StateP, StateQ };
enum class Conclusion { IdentifiedP, IdentifiedQ, Inconclusive };

std::string_view to_string(Engine engine);

struct RunOutcome {
  Hypothesis truth = Hypothesis::StateP;
  Conclusion conclusion = Conclusion::Inconclusive;
  int measurements_used = 0;
};

inline bool is_misidentified(const RunOutcome& outcome) {
  return (outcome.conclusion == Conclusion::IdentifiedP && outcome.truth != Hypothesis::StateP) ||
         (outcome.conclusion == Conclusion::IdentifiedQ && outcome.truth != Hypothesis::StateQ);
}

/// Per-party measurements for one (instance, order, engine), built once and
/// reused across trials.
class CompiledProtocol {
 public:
  CompiledProtocol(const ProductInstance& instance, const Order& order, Engine engine);

  RunOutcome run_trial(RandomStream& rng) const;
  Engine engine() const { return engine_; }

 private:
  struct Step {
    LocalPair pair;
    std::variant<Povm, NeumarkModel> measurement;
  };

  Priors priors_;
  Engine engine_;
  std::vector<Step> steps_;
};

/// One run of the protocol on a physically sampled truth.
RunOutcome single_trial(const ProductInstance& instance, const Order& order, Engine engine,
                        RandomStream& rng);

struct SimStats {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double success_rate = 0.0;
  std::uint64_t misidentifications = 0;
  double mean_measurements = 0.0;
  double success_stderr = 0.0;
  // Standard error of mean_measurements from the sample variance.
  double measurements_stderr = 0.0;
};

/// Trial i draws from RandomStream(derive_seed(seed, i)).
SimStats simulate(const ProductInstance& instance, const Order& order, std::uint64_t trials,
                  std::uint64_t seed, Engine engine);

}  // namespace uqsd
