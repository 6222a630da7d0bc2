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

#include "uqsd/errors.hpp"
#include "uqsd/pair_disc.hpp"
#include "uqsd/tolerances.hpp"

namespace uqsd {
namespace {

// Unit vector in span{target, other} orthogonal to other.
Vector orthogonal_direction(const Vector& target, const Vector& other) {
  Vector w = target;
  for (int pass = 0; pass < 2; ++pass) {
    w -= other.dot(w) * other;
  }
  return w.normalized();
}

// weight |w><w| scaled so that <target|E|target> = weight.
Matrix scaled_projector(const Vector& w, const Vector& target, double weight) {
  const double reach = std::norm(w.dot(target));
  return (weight / reach) * (w * w.adjoint());
}

}  // namespace

Povm build_povm(const LocalPair& pair, const Strategy& strategy) {
  if (is_degenerate_overlap(pair.overlap())) {
    throw DegeneratePair("identical local states admit no conclusive measurement");
  }
  const Vector& p = pair.p().amplitudes();
  const Vector& q = pair.q().amplitudes();
  const auto dim = static_cast<Eigen::Index>(pair.dim());

  Povm out;
  out.e_p = scaled_projector(orthogonal_direction(p, q), p, 1.0 - strategy.fail_p);
  out.e_q = scaled_projector(orthogonal_direction(q, p), q, 1.0 - strategy.fail_q);
  out.e_fail = Matrix::Identity(dim, dim) - out.e_p - out.e_q;
  return out;
}

}  // namespace uqsd
