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
#include <cmath>
#include <vector>

#include "uqsd/errors.hpp"
#include "uqsd/pair_disc.hpp"
#include "uqsd/tolerances.hpp"

namespace uqsd {
namespace {

// Extends orthonormal columns to a full basis of C^n by Gram-Schmidt over
// the canonical basis vectors in index order.
Matrix complete_basis(std::vector<Vector> columns, Eigen::Index n) {
  for (Eigen::Index k = 0; k < n && static_cast<Eigen::Index>(columns.size()) < n; ++k) {
    Vector v = Vector::Zero(n);
    v(k) = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& col : columns) v -= col.dot(v) * col;
    }
    const double norm = v.norm();
    if (norm > 1e-6) columns.push_back(v / norm);
  }
  Matrix out(n, n);
  for (Eigen::Index k = 0; k < n; ++k) out.col(k) = columns[static_cast<std::size_t>(k)];
  return out;
}

}  // namespace

Vector embed_with_ancilla(const PureState& psi) {
  const auto dim = static_cast<Eigen::Index>(psi.dim());
  Vector out = Vector::Zero(2 * dim);
  out.head(dim) = psi.amplitudes();
  return out;
}

NeumarkModel neumark_model(const LocalPair& pair, const Strategy& strategy) {
  if (is_degenerate_overlap(pair.overlap())) {
    throw DegeneratePair("identical local states admit no conclusive measurement");
  }
  const double c = pair.overlap();
  const double alpha = std::sqrt(std::max(0.0, 1.0 - strategy.fail_p));
  const double beta = std::sqrt(std::max(0.0, strategy.fail_p));
  const double gamma = std::sqrt(std::max(0.0, 1.0 - strategy.fail_q));
  const double delta = std::sqrt(std::max(0.0, strategy.fail_q));
  if (std::abs(beta * delta - c) > kNormTol) {
    throw InconsistentStrategy("failure amplitudes do not match the pair overlap");
  }

  const std::size_t dim = pair.dim();
  const auto d = static_cast<Eigen::Index>(dim);
  const Complex overlap = inner_product(pair.p(), pair.q());

  NeumarkModel model{
      .unitary = Matrix(),
      .conclusive_p = PureState::basis(dim, 0),
      .conclusive_q = PureState::basis(dim, 1),
      .fail_state_p2 = PureState::basis(dim, 0),
      .fail_phase = (c > 0.0) ? overlap / c : Complex(1.0, 0.0),
  };

  // Images of |s0>|p> and |s0>|q>.
  Vector target_p = Vector::Zero(2 * d);
  target_p(0) = alpha;
  target_p(d) = beta;
  Vector target_q = Vector::Zero(2 * d);
  target_q(1) = gamma;
  target_q(d) = delta * model.fail_phase;

  // Orthonormal input frame {|s0>|p>, |s0>|q_perp>} and its image.
  const Vector in_p = embed_with_ancilla(pair.p());
  Vector in_perp = embed_with_ancilla(pair.q()) - overlap * in_p;
  const double perp_norm = in_perp.norm();
  in_perp /= perp_norm;
  const Vector out_perp = (target_q - overlap * target_p) / perp_norm;

  const Matrix inputs = complete_basis({in_p, in_perp}, 2 * d);
  const Matrix outputs = complete_basis({target_p, out_perp}, 2 * d);
  model.unitary = outputs * inputs.adjoint();
  return model;
}

}  // namespace uqsd
