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
#include "uqsd/locc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "uqsd/errors.hpp"
#include "uqsd/tolerances.hpp"

namespace uqsd {

Order::Order(std::vector<std::size_t> permutation) : permutation_(std::move(permutation)) {
  std::vector<bool> seen(permutation_.size(), false);
  for (std::size_t index : permutation_) {
    if (index >= permutation_.size() || seen[index]) {
      throw InvalidInput("order is not a permutation of 0..n-1");
    }
    seen[index] = true;
  }
}

Order Order::identity(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return Order(std::move(perm));
}

double global_overlap(const ProductInstance& instance) {
  double c = 1.0;
  for (const auto& pair : instance.parties()) c *= pair.overlap();
  return c;
}

double global_optimum(const ProductInstance& instance) {
  return optimal_strategy(global_overlap(instance), instance.priors()).p_success;
}

ProtocolResult run_protocol(const ProductInstance& instance, const Order& order) {
  if (order.size() != instance.size()) {
    throw InvalidInput("order length does not match the number of parties");
  }
  ProtocolResult result;
  result.transcript.reserve(order.size());
  Priors priors = instance.priors();
  double p_reach = 1.0;

  for (std::size_t party : order) {
    const double c = instance.party(party).overlap();
    StepRecord step;
    step.party_index = party;
    step.p_reach = p_reach;
    step.priors_before = priors;
    step.local_overlap = c;
    step.skipped = is_degenerate_overlap(c);

    const Strategy strategy = optimal_strategy(step.skipped ? 1.0 : c, priors);
    step.regime = strategy.regime;
    step.posterior_after_fail = priors;
    if (step.skipped) {
      step.p_conclusive_given_reached = 0.0;
      result.transcript.push_back(step);
      continue;
    }
    step.p_conclusive_given_reached = strategy.p_success;
    if (strategy.p_fail > 0.0) {
      step.posterior_after_fail = failure_posterior(strategy, priors);
    }

    result.expected_measurements += p_reach;
    result.p_success += p_reach * strategy.p_success;
    p_reach *= strategy.p_fail;
    priors = step.posterior_after_fail;
    result.transcript.push_back(step);
  }
  result.p_inconclusive = p_reach;
  return result;
}

double verify_local_equals_global(const ProductInstance& instance, const Order& order) {
  return std::abs(run_protocol(instance, order).p_success - global_optimum(instance));
}

std::vector<OrderEvaluation> enumerate_orders(const ProductInstance& instance) {
  if (instance.size() > kMaxExhaustiveParties) {
    throw InvalidInput("exhaustive order search is limited to " +
                       std::to_string(kMaxExhaustiveParties) + " parties");
  }
  std::vector<OrderEvaluation> out;
  std::vector<std::size_t> perm = Order::identity(instance.size()).indices();
  do {
    Order order(perm);
    const ProtocolResult run = run_protocol(instance, order);
    out.push_back({std::move(order), run.expected_measurements, run.p_success});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

OrderChoice best_order(const ProductInstance& instance, OrderMode mode) {
  if (mode == OrderMode::AscendingOverlap) {
    std::vector<std::size_t> perm = Order::identity(instance.size()).indices();
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      return instance.party(a).overlap() < instance.party(b).overlap();
    });
    Order order(std::move(perm));
    const double cost = run_protocol(instance, order).expected_measurements;
    return {std::move(order), cost};
  }

  const std::vector<OrderEvaluation> table = enumerate_orders(instance);
  const OrderEvaluation* best = &table.front();
  for (const auto& entry : table) {
    if (entry.expected_measurements < best->expected_measurements - kNormTol) best = &entry;
  }
  return {best->order, best->expected_measurements};
}

ProductInstance group(const ProductInstance& instance, const Partition& partition) {
  std::vector<bool> covered(instance.size(), false);
  std::vector<LocalPair> merged;
  merged.reserve(partition.size());
  for (const auto& block : partition) {
    if (block.empty()) {
      throw InvalidInput("partition contains an empty block");
    }
    for (std::size_t index : block) {
      if (index >= instance.size() || covered[index]) {
        throw InvalidInput("partition blocks must be disjoint and index existing parties");
      }
      covered[index] = true;
    }
    PureState p = instance.party(block.front()).p();
    PureState q = instance.party(block.front()).q();
    for (std::size_t k = 1; k < block.size(); ++k) {
      p = tensor_product(p, instance.party(block[k]).p());
      q = tensor_product(q, instance.party(block[k]).q());
    }
    merged.emplace_back(std::move(p), std::move(q));
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    throw InvalidInput("partition does not cover every party");
  }
  return ProductInstance(std::move(merged), instance.priors());
}

}  // namespace uqsd
