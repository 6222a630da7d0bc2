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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace uqsd {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Unit vector in C^dim. Global phase is kept as given.
class PureState {
 public:
  /// Accepts amplitudes whose norm is 1 within kNormTol.
  static PureState from_amplitudes(Vector amplitudes);
  /// Rescales any nonzero vector to unit norm.
  static PureState normalized(Vector amplitudes);
  /// Computational basis vector |index> in C^dim.
  static PureState basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

  friend bool operator==(const PureState& a, const PureState& b) {
    return a.amplitudes_ == b.amplitudes_;
  }

 private:
  explicit PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {}
  Vector amplitudes_;
};

/// <a|b>, antilinear in the first argument.
Complex inner_product(const PureState& a, const PureState& b);

/// |a> (x) |b> with the index of a most significant.
PureState tensor_product(const PureState& a, const PureState& b);

/// Occurrence probabilities of the two hypotheses.
class Priors {
 public:
  Priors(double r, double s);
  static Priors from_r(double r) { return Priors(r, 1.0 - r); }

  double r() const { return r_; }
  double s() const { return s_; }

  friend bool operator==(const Priors&, const Priors&) = default;

 private:
  double r_;
  double s_;
};

/// The two hypotheses as seen by one party, with |<p|q>| cached. Overlaps
/// within kNormTol of 0 or 1 are stored as exactly 0 or 1.
class LocalPair {
 public:
  LocalPair(PureState p, PureState q);

  const PureState& p() const { return p_; }
  const PureState& q() const { return q_; }
  std::size_t dim() const { return p_.dim(); }
  double overlap() const { return overlap_; }

 private:
  PureState p_;
  PureState q_;
  double overlap_;
};

/// Two product hypotheses |u> = |u_1>...|u_n>, |v> = |v_1>...|v_n>.
class ProductInstance {
 public:
  ProductInstance(std::vector<LocalPair> parties, Priors priors);

  const std::vector<LocalPair>& parties() const { return parties_; }
  const LocalPair& party(std::size_t i) const { return parties_.at(i); }
  std::size_t size() const { return parties_.size(); }
  const Priors& priors() const { return priors_; }
  std::vector<double> overlaps() const;

 private:
  std::vector<LocalPair> parties_;
  Priors priors_;
};

/// Haar-random state: 2*dim standard normals as real and imaginary parts,
/// normalized.
PureState random_pure_state(std::size_t dim, std::uint64_t seed);

/// Pair with |<p|q>| = c. p is Haar random; q mixes p with a random
/// orthogonal direction and carries a random relative phase.
LocalPair state_pair_with_overlap(double c, std::size_t dim, std::uint64_t seed);

/// n independent random pairs of dimension dim; priors drawn uniformly and
/// normalized.
ProductInstance random_instance(std::size_t n, std::size_t dim, std::uint64_t seed);

}  // namespace uqsd
