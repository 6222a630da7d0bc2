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

#include <string_view>

#include "uqsd/states.hpp"

namespace uqsd {

enum class Regime {
  // sqrt(min/max prior) >= c: failure leaves both hypotheses equally likely.
  EqualPosterior,
  // sqrt(min/max prior) < c: the less likely state is never identified.
  Saturated,
};

std::string_view to_string(Regime regime);

/// Optimal unambiguous measurement of one pair, described by its failure
/// probabilities |beta|^2 (given p) and |delta|^2 (given q).
struct Strategy {
  Regime regime = Regime::EqualPosterior;
  double overlap = 0.0;
  double fail_p = 0.0;
  double fail_q = 0.0;
  double p_success = 1.0;
  double p_fail = 0.0;
  // Roles of p and q were exchanged internally because s > r.
  bool swapped = false;
};

/// Closed-form optimum for overlap c under the given priors.
Strategy optimal_strategy(double c, const Priors& priors);

/// Priors conditioned on the inconclusive outcome of `strategy`.
/// Throws NoPosterior when the strategy cannot fail.
Priors failure_posterior(const Strategy& strategy, const Priors& priors);

/// Measurement operators for outcomes "p", "q" and "don't know".
struct Povm {
  Matrix e_p;
  Matrix e_q;
  Matrix e_fail;
};

/// e_p is proportional to the projector on the direction of span{p, q}
/// orthogonal to q (and symmetrically for e_q), scaled so the Born
/// probabilities reproduce the strategy. Throws DegeneratePair for c = 1.
Povm build_povm(const LocalPair& pair, const Strategy& strategy);

/// Ancilla-assisted realization of the strategy. The joint space is
/// ancilla (x) system with the ancilla index most significant, so joint
/// index = ancilla * dim + system.
///
///   U |s0>|p> = alpha |s1>|p1> + beta  |s2>|p2>
///   U |s0>|q> = gamma |s1>|q1> + delta |s2>|q2>,   |q2> = fail_phase |p2>
///
/// with alpha..delta real nonnegative, p1 = p2 = |0>, q1 = |1>.
struct NeumarkModel {
  Matrix unitary;
  std::size_t ancilla_initial = 0;
  std::size_t ancilla_conclusive = 0;
  std::size_t ancilla_inconclusive = 1;
  PureState conclusive_p;
  PureState conclusive_q;
  PureState fail_state_p2;
  Complex fail_phase{1.0, 0.0};
};

/// Throws DegeneratePair for c = 1 and InconsistentStrategy when
/// sqrt(fail_p * fail_q) differs from the pair overlap.
NeumarkModel neumark_model(const LocalPair& pair, const Strategy& strategy);

/// |s0>|psi> lifted into the joint ancilla (x) system space.
Vector embed_with_ancilla(const PureState& psi);

}  // namespace uqsd
