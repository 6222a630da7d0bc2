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
#include "uqsd/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "uqsd/errors.hpp"
#include "uqsd/random.hpp"
#include "uqsd/tolerances.hpp"

namespace uqsd {

PureState PureState::from_amplitudes(Vector amplitudes) {
  if (amplitudes.size() == 0) {
    throw InvalidInput("state must have at least one amplitude");
  }
  const double norm = amplitudes.norm();
  if (!std::isfinite(norm) || std::abs(norm * norm - 1.0) > kNormTol) {
    throw InvalidInput("state is not normalized (norm^2 = " + std::to_string(norm * norm) + ")");
  }
  return PureState(std::move(amplitudes));
}

PureState PureState::normalized(Vector amplitudes) {
  if (amplitudes.size() == 0) {
    throw InvalidInput("state must have at least one amplitude");
  }
  const double norm = amplitudes.norm();
  if (!std::isfinite(norm) || norm == 0.0) {
    throw InvalidInput("cannot normalize a zero or non-finite vector");
  }
  amplitudes /= norm;
  return PureState(std::move(amplitudes));
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw InvalidInput("basis index out of range");
  }
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(v));
}

Complex inner_product(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) {
    throw InvalidInput("inner product of states with different dimensions");
  }
  return a.amplitudes().dot(b.amplitudes());
}

PureState tensor_product(const PureState& a, const PureState& b) {
  Vector out(static_cast<Eigen::Index>(a.dim() * b.dim()));
  const auto nb = static_cast<Eigen::Index>(b.dim());
  for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i) {
    out.segment(i * nb, nb) = a.amplitudes()(i) * b.amplitudes();
  }
  return PureState::normalized(std::move(out));
}

Priors::Priors(double r, double s) : r_(r), s_(s) {
  if (!(r >= 0.0 && r <= 1.0 && s >= 0.0 && s <= 1.0)) {
    throw InvalidInput("priors must lie in [0, 1]");
  }
  if (std::abs(r + s - 1.0) > kNormTol) {
    throw InvalidInput("priors must sum to 1");
  }
}

LocalPair::LocalPair(PureState p, PureState q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_.dim() != q_.dim()) {
    throw InvalidInput("local pair states have different dimensions");
  }
  if (p_.dim() < 2) {
    throw InvalidInput("local states need dimension >= 2");
  }
  // Snap to the exact endpoints so orthogonal and identical pairs behave
  // exactly downstream.
  const double c = std::abs(inner_product(p_, q_));
  overlap_ = c <= kNormTol ? 0.0 : (c >= 1.0 - kNormTol ? 1.0 : c);
}

ProductInstance::ProductInstance(std::vector<LocalPair> parties, Priors priors)
    : parties_(std::move(parties)), priors_(priors) {
  if (parties_.empty()) {
    throw InvalidInput("instance needs at least one party");
  }
}

std::vector<double> ProductInstance::overlaps() const {
  std::vector<double> out;
  out.reserve(parties_.size());
  for (const auto& pair : parties_) out.push_back(pair.overlap());
  return out;
}

namespace {

Vector gaussian_vector(std::size_t dim, RandomStream& rng) {
  Vector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = rng.normal();
    const double im = rng.normal();
    v(i) = Complex(re, im);
  }
  return v;
}

}  // namespace

PureState random_pure_state(std::size_t dim, std::uint64_t seed) {
  if (dim < 2) {
    throw InvalidInput("random states need dimension >= 2");
  }
  RandomStream rng(seed);
  return PureState::normalized(gaussian_vector(dim, rng));
}

LocalPair state_pair_with_overlap(double c, std::size_t dim, std::uint64_t seed) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw InvalidInput("overlap must lie in [0, 1]");
  }
  if (dim < 2) {
    throw InvalidInput("local states need dimension >= 2");
  }
  PureState p = random_pure_state(dim, derive_seed(seed, 0));
  RandomStream rng(derive_seed(seed, 1));
  // Random direction orthogonal to p, Gram-Schmidt applied twice.
  Vector w = gaussian_vector(dim, rng);
  for (int pass = 0; pass < 2; ++pass) {
    w -= p.amplitudes().dot(w) * p.amplitudes();
  }
  w.normalize();
  const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
  Vector q = phase * (c * p.amplitudes() + std::sqrt(1.0 - c * c) * w);
  return LocalPair(std::move(p), PureState::normalized(std::move(q)));
}

ProductInstance random_instance(std::size_t n, std::size_t dim, std::uint64_t seed) {
  if (n < 1) {
    throw InvalidInput("instance needs at least one party");
  }
  if (dim < 2) {
    throw InvalidInput("local states need dimension >= 2");
  }
  std::vector<LocalPair> parties;
  parties.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t party_seed = derive_seed(seed, i + 1);
    parties.emplace_back(random_pure_state(dim, derive_seed(party_seed, 0)),
                         random_pure_state(dim, derive_seed(party_seed, 1)));
  }
  RandomStream rng(derive_seed(seed, 0));
  const double a = rng.uniform();
  const double b = rng.uniform();
  const double r = (a + b > 0.0) ? a / (a + b) : 0.5;
  return ProductInstance(std::move(parties), Priors(r, 1.0 - r));
}

}  // namespace uqsd
