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

#include <cstddef>
#include <vector>

#include "uqsd/pair_disc.hpp"
#include "uqsd/states.hpp"

namespace uqsd {

/// Visiting order of the parties: a permutation of 0..n-1.
class Order {
 public:
  explicit Order(std::vector<std::size_t> permutation);
  static Order identity(std::size_t n);

  std::size_t size() const { return permutation_.size(); }
  std::size_t operator[](std::size_t i) const { return permutation_[i]; }
  const std::vector<std::size_t>& indices() const { return permutation_; }
  auto begin() const { return permutation_.begin(); }
  auto end() const { return permutation_.end(); }

  friend bool operator==(const Order&, const Order&) = default;
  friend auto operator<=>(const Order&, const Order&) = default;

 private:
  std::vector<std::size_t> permutation_;
};

struct StepRecord {
  std::size_t party_index = 0;
  // Probability that every earlier party reported failure.
  double p_reach = 0.0;
  Priors priors_before{0.5, 0.5};
  double local_overlap = 0.0;
  Regime regime = Regime::EqualPosterior;
  double p_conclusive_given_reached = 0.0;
  Priors posterior_after_fail{0.5, 0.5};
  // Identical local states: no measurement is made.
  bool skipped = false;
};

struct ProtocolResult {
  double p_success = 0.0;
  double p_inconclusive = 1.0;
  double expected_measurements = 0.0;
  std::vector<StepRecord> transcript;
};

/// |<u|v>| = prod_i |<u_i|v_i>|.
double global_overlap(const ProductInstance& instance);

/// Best success probability of a joint measurement on the whole system.
double global_optimum(const ProductInstance& instance);

/// Runs the sequential protocol: each party measures optimally for the
/// priors conditioned on all earlier failures, and the next party acts only
/// when told the previous one failed.
ProtocolResult run_protocol(const ProductInstance& instance, const Order& order);

/// |P_LOCC - P_global| for the given order.
double verify_local_equals_global(const ProductInstance& instance, const Order& order);

enum class OrderMode { AscendingOverlap, Exhaustive };

struct OrderChoice {
  Order order;
  double expected_measurements = 0.0;
};

struct OrderEvaluation {
  Order order;
  double expected_measurements = 0.0;
  double p_success = 0.0;
};

inline constexpr std::size_t kMaxExhaustiveParties = 8;

/// Every order in lexicographic sequence. Throws InvalidInput for more than
/// kMaxExhaustiveParties parties.
std::vector<OrderEvaluation> enumerate_orders(const ProductInstance& instance);

/// AscendingOverlap sorts by local overlap (stable in party index).
/// Exhaustive returns the lexicographically first order of minimal cost;
/// costs within kNormTol of each other count as ties.
OrderChoice best_order(const ProductInstance& instance, OrderMode mode);

using Partition = std::vector<std::vector<std::size_t>>;

/// Merges each block of the partition into one party holding the tensor
/// product of its members' states, in the order listed.
ProductInstance group(const ProductInstance& instance, const Partition& partition);

}  // namespace uqsd
