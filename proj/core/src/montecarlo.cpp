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
#include "uqsd/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <type_traits>

#include "uqsd/errors.hpp"

namespace uqsd {
namespace {

// Outcome probabilities in the order (identify p, identify q, fail).
using OutcomeProbabilities = std::array<double, 3>;

OutcomeProbabilities born_probabilities(const Povm& povm, const Vector& psi) {
  return {psi.dot(povm.e_p * psi).real(), psi.dot(povm.e_q * psi).real(),
          psi.dot(povm.e_fail * psi).real()};
}

OutcomeProbabilities evolve_and_read(const NeumarkModel& model, const PureState& psi) {
  const Vector out = model.unitary * embed_with_ancilla(psi);
  const auto d = static_cast<Eigen::Index>(psi.dim());
  const auto conclusive = out.segment(static_cast<Eigen::Index>(model.ancilla_conclusive) * d, d);
  const auto inconclusive = out.segment(static_cast<Eigen::Index>(model.ancilla_inconclusive) * d, d);
  return {std::norm(model.conclusive_p.amplitudes().dot(conclusive)),
          std::norm(model.conclusive_q.amplitudes().dot(conclusive)), inconclusive.squaredNorm()};
}

// Index of the sampled outcome; any rounding residue falls to "fail".
int sample(const OutcomeProbabilities& probs, double u) {
  double cumulative = 0.0;
  for (int k = 0; k < 2; ++k) {
    cumulative += probs[static_cast<std::size_t>(k)];
    if (u < cumulative) return k;
  }
  return 2;
}

}  // namespace

std::string_view to_string(Engine engine) {
  switch (engine) {
    case Engine::PovmSampling:
      return "povm";
    case Engine::NeumarkEvolution:
      return "neumark";
  }
  return "unknown";
}

CompiledProtocol::CompiledProtocol(const ProductInstance& instance, const Order& order,
                                   Engine engine)
    : priors_(instance.priors()), engine_(engine) {
  const ProtocolResult plan = run_protocol(instance, order);
  for (const StepRecord& record : plan.transcript) {
    if (record.skipped) continue;
    const LocalPair& pair = instance.party(record.party_index);
    const Strategy strategy = optimal_strategy(record.local_overlap, record.priors_before);
    if (engine == Engine::PovmSampling) {
      steps_.push_back({pair, build_povm(pair, strategy)});
    } else {
      steps_.push_back({pair, neumark_model(pair, strategy)});
    }
  }
}

RunOutcome CompiledProtocol::run_trial(RandomStream& rng) const {
  RunOutcome outcome;
  outcome.truth = rng.uniform() < priors_.r() ? Hypothesis::StateP : Hypothesis::StateQ;
  for (const Step& step : steps_) {
    const PureState& psi = outcome.truth == Hypothesis::StateP ? step.pair.p() : step.pair.q();
    const OutcomeProbabilities probs = std::visit(
        [&](const auto& m) {
          if constexpr (std::is_same_v<std::decay_t<decltype(m)>, Povm>) {
            return born_probabilities(m, psi.amplitudes());
          } else {
            return evolve_and_read(m, psi);
          }
        },
        step.measurement);
    ++outcome.measurements_used;
    const int k = sample(probs, rng.uniform());
    if (k == 0) {
      outcome.conclusion = Conclusion::IdentifiedP;
      return outcome;
    }
    if (k == 1) {
      outcome.conclusion = Conclusion::IdentifiedQ;
      return outcome;
    }
  }
  outcome.conclusion = Conclusion::Inconclusive;
  return outcome;
}

RunOutcome single_trial(const ProductInstance& instance, const Order& order, Engine engine,
                        RandomStream& rng) {
  return CompiledProtocol(instance, order, engine).run_trial(rng);
}

SimStats simulate(const ProductInstance& instance, const Order& order, std::uint64_t trials,
                  std::uint64_t seed, Engine engine) {
  if (trials < 1) {
    throw InvalidInput("simulation needs at least one trial");
  }
  const CompiledProtocol protocol(instance, order, engine);
  SimStats stats;
  stats.trials = trials;
  // Integer accumulators keep the totals independent of summation order.
  std::uint64_t measurements = 0;
  std::uint64_t measurements_sq = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    RandomStream rng(derive_seed(seed, i));
    const RunOutcome outcome = protocol.run_trial(rng);
    if (outcome.conclusion != Conclusion::Inconclusive) ++stats.successes;
    if (is_misidentified(outcome)) ++stats.misidentifications;
    const auto used = static_cast<std::uint64_t>(outcome.measurements_used);
    measurements += used;
    measurements_sq += used * used;
  }
  const auto n = static_cast<double>(trials);
  stats.success_rate = static_cast<double>(stats.successes) / n;
  stats.success_stderr = std::sqrt(stats.success_rate * (1.0 - stats.success_rate) / n);
  stats.mean_measurements = static_cast<double>(measurements) / n;
  const double mean_sq = static_cast<double>(measurements_sq) / n;
  const double variance = std::max(0.0, mean_sq - stats.mean_measurements * stats.mean_measurements);
  stats.measurements_stderr = trials > 1 ? std::sqrt(variance * n / (n - 1.0) / n) : 0.0;
  return stats;
}

}  // namespace uqsd
