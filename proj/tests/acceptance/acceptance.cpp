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
// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails. Usage: uqsd_acceptance <path-to-uqsd-binary>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "uqsd/locc.hpp"
#include "uqsd/montecarlo.hpp"
#include "uqsd/oracle.hpp"
#include "uqsd/pair_disc.hpp"
#include "uqsd/random.hpp"
#include "uqsd/states.hpp"
#include "uqsd/tolerances.hpp"

namespace {

using namespace uqsd;

struct Verdict {
  bool passed;
  std::string detail;
};

std::string sci(double x) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << x;
  return out.str();
}

std::vector<Order> all_orders(std::size_t n) {
  std::vector<Order> out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do out.emplace_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Order shuffled(std::size_t n, RandomStream& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    const auto j = std::min(i - 1, static_cast<std::size_t>(rng.uniform() * static_cast<double>(i)));
    std::swap(perm[i - 1], perm[j]);
  }
  return Order(std::move(perm));
}

// Random parties with independently drawn local dimensions in [2, 4].
ProductInstance mixed_instance(std::size_t n, std::uint64_t seed) {
  RandomStream rng(derive_seed(seed, 0));
  std::vector<LocalPair> parties;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t dim = 2 + static_cast<std::size_t>(rng() % 3);
    parties.emplace_back(random_pure_state(dim, derive_seed(seed, 2 * i + 1)),
                         random_pure_state(dim, derive_seed(seed, 2 * i + 2)));
  }
  return ProductInstance(std::move(parties), Priors::from_r(rng.uniform()));
}

ProductInstance with_overlaps(const std::vector<double>& overlaps, double r, std::uint64_t seed) {
  std::vector<LocalPair> parties;
  for (std::size_t i = 0; i < overlaps.size(); ++i) {
    parties.push_back(state_pair_with_overlap(overlaps[i], 2, derive_seed(seed, i)));
  }
  return ProductInstance(std::move(parties), Priors::from_r(r));
}

double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double expectation(const Matrix& m, const PureState& psi) {
  return psi.amplitudes().dot(m * psi.amplitudes()).real();
}

Verdict oracle_optimality() {
  const auto start = std::chrono::steady_clock::now();
  RandomStream rng(1001);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double c = rng.uniform();
    const Priors priors = Priors::from_r(rng.uniform());
    worst = std::max(worst, std::abs(optimal_strategy(c, priors).p_success -
                                     brute_force_strategy(c, priors, 10000).p_success));
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= 1e-6 && seconds < 10.0,
          "1000 pairs, max |analytic - oracle| = " + sci(worst) + " (tol 1e-6), runtime " +
              std::to_string(seconds) + " s (limit 10 s)"};
}

Verdict locc_equals_global() {
  RandomStream rng(2002);
  double worst = 0.0;
  std::size_t orders_tested = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 5);
    const ProductInstance instance = mixed_instance(n, derive_seed(2002, i));
    const double global = global_optimum(instance);
    std::vector<Order> orders;
    if (n <= 4) {
      orders = all_orders(n);
    } else {
      for (int k = 0; k < 20; ++k) orders.push_back(shuffled(n, rng));
    }
    for (const Order& order : orders) {
      worst = std::max(worst, std::abs(run_protocol(instance, order).p_success - global));
      ++orders_tested;
    }
  }
  return {worst <= 1e-12, "500 instances, " + std::to_string(orders_tested) +
                              " orders, max |P_L - P_G| = " + sci(worst) + " (tol 1e-12)"};
}

Verdict tripartite_value() {
  const ProductInstance instance = with_overlaps({0.9, 0.5, 0.2}, 0.6, 3003);
  const double expected = 1.0 - 2.0 * std::sqrt(0.24) * 0.09;
  double worst = std::abs(global_optimum(instance) - expected);
  for (const Order& order : all_orders(3)) {
    worst = std::max(worst, std::abs(run_protocol(instance, order).p_success - expected));
  }
  return {worst <= 1e-12, "P_G = " + std::to_string(expected) + ", 6 orders, max deviation " +
                              sci(worst) + " (tol 1e-12)"};
}

Verdict regime_boundary() {
  double worst = 0.0;
  double worst_jump = 0.0;
  constexpr double kStep = 1e-6;
  bool regimes_flip = true;
  for (int k = 0; k < 20; ++k) {
    const double c = 0.025 + 0.95 * k / 19.0;
    const double r = 1.0 / (1.0 + c * c);
    const Priors at = Priors::from_r(r);
    const double expected = (1.0 - c * c) / (1.0 + c * c);
    const double equal_branch = 1.0 - 2.0 * std::sqrt(at.r() * at.s()) * c;
    const double saturated_branch = at.r() * (1.0 - c * c);
    worst = std::max({worst, std::abs(equal_branch - saturated_branch),
                      std::abs(optimal_strategy(c, at).p_success - expected)});
    // p_success has slope at most 1 in r on either side of the boundary.
    const Strategy below = optimal_strategy(c, Priors::from_r(r - kStep));
    const Strategy above = optimal_strategy(c, Priors::from_r(r + kStep));
    worst_jump = std::max(worst_jump, std::abs(above.p_success - below.p_success));
    regimes_flip = regimes_flip && below.regime == Regime::EqualPosterior &&
                   above.regime == Regime::Saturated;
  }
  return {worst <= 1e-12 && worst_jump <= 4.0 * kStep && regimes_flip,
          "20 points, max formula gap " + sci(worst) + " (tol 1e-12), max jump across boundary " +
              sci(worst_jump) + " for dr = 2e-6 (limit 4e-6)"};
}

Verdict posterior_correctness() {
  RandomStream rng(5005);
  double worst_equal = 0.0;
  double worst_saturated = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Priors priors = Priors::from_r(0.5 + 0.49 * rng.uniform());
    const double bound = std::sqrt(priors.s() / priors.r());
    const double c_equal = std::max(1e-6, bound * rng.uniform());
    const Strategy equal = optimal_strategy(c_equal, priors);
    const Priors post_equal = failure_posterior(equal, priors);
    worst_equal = std::max({worst_equal, std::abs(post_equal.r() - 0.5), std::abs(post_equal.s() - 0.5)});

    const double c_sat = bound + (1.0 - bound) * (0.01 + 0.99 * rng.uniform());
    const Strategy saturated = optimal_strategy(c_sat, priors);
    const Priors post = failure_posterior(saturated, priors);
    const double p_fail = priors.r() * c_sat * c_sat + priors.s();
    worst_saturated = std::max({worst_saturated,
                                std::abs(post.r() - priors.r() * c_sat * c_sat / p_fail),
                                std::abs(post.s() - priors.s() / p_fail),
                                saturated.regime == Regime::Saturated ? 0.0 : 1.0});
  }
  return {worst_equal <= 1e-12 && worst_saturated <= 1e-12,
          "equal-posterior max deviation " + sci(worst_equal) + ", saturated max deviation " +
              sci(worst_saturated) + " (tol 1e-12)"};
}

Verdict physical_layer() {
  RandomStream rng(6006);
  double worst_psd = 0.0;
  double worst_complete = 0.0;
  double worst_cross = 0.0;
  double worst_unitary = 0.0;
  double worst_branch = 0.0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::size_t dim = 2 + static_cast<std::size_t>(i % 3);
    const auto d = static_cast<Eigen::Index>(dim);
    const LocalPair pair(random_pure_state(dim, derive_seed(6006, 2 * i)),
                         random_pure_state(dim, derive_seed(6006, 2 * i + 1)));
    const Strategy s = optimal_strategy(pair.overlap(), Priors::from_r(rng.uniform()));
    const Povm povm = build_povm(pair, s);
    worst_psd = std::max({worst_psd, -min_eigenvalue(povm.e_p), -min_eigenvalue(povm.e_q),
                          -min_eigenvalue(povm.e_fail)});
    worst_complete = std::max(
        worst_complete,
        (povm.e_p + povm.e_q + povm.e_fail - Matrix::Identity(d, d)).cwiseAbs().maxCoeff());
    worst_cross = std::max({worst_cross, expectation(povm.e_p, pair.q()),
                            expectation(povm.e_q, pair.p())});

    const NeumarkModel model = neumark_model(pair, s);
    const Matrix& u = model.unitary;
    worst_unitary = std::max(
        worst_unitary, (u.adjoint() * u - Matrix::Identity(2 * d, 2 * d)).cwiseAbs().maxCoeff());
    const Vector up = u * embed_with_ancilla(pair.p());
    const Vector uq = u * embed_with_ancilla(pair.q());
    worst_branch = std::max({worst_branch, std::abs(up.tail(d).squaredNorm() - s.fail_p),
                             std::abs(uq.tail(d).squaredNorm() - s.fail_q),
                             std::abs(std::norm(up(0)) - (1.0 - s.fail_p)),
                             std::abs(std::norm(uq(1)) - (1.0 - s.fail_q))});
  }
  const bool ok = worst_psd <= 1e-12 && worst_complete <= 1e-12 && worst_cross <= 1e-12 &&
                  worst_unitary <= 1e-12 && worst_branch <= 1e-12;
  return {ok, "200 pairs: -min eig " + sci(std::max(0.0, worst_psd)) + ", completeness " +
                  sci(worst_complete) + ", cross terms " + sci(std::max(0.0, worst_cross)) +
                  ", |U'U - I|max " + sci(worst_unitary) + ", branches " + sci(worst_branch) +
                  " (tol 1e-12)"};
}

Verdict monte_carlo() {
  const ProductInstance instance = with_overlaps({0.5, 0.5}, 0.5, 7007);
  const Order order({0, 1});
  const SimStats povm = simulate(instance, order, 1000000, 7007, Engine::PovmSampling);
  const SimStats neumark = simulate(instance, order, 1000000, 7008, Engine::NeumarkEvolution);
  bool ok = true;
  std::ostringstream detail;
  for (const auto* stats : {&povm, &neumark}) {
    const double z_success = std::abs(stats->success_rate - 0.75) / stats->success_stderr;
    const double z_count = std::abs(stats->mean_measurements - 1.5) / stats->measurements_stderr;
    ok = ok && z_success <= 5.0 && z_count <= 5.0 && stats->misidentifications == 0;
    detail << (stats == &povm ? "povm" : "neumark") << ": rate " << stats->success_rate << " (z "
           << z_success << "), mean " << stats->mean_measurements << " (z " << z_count << "), "
           << stats->misidentifications << " misid; ";
  }
  const double combined = std::hypot(povm.success_stderr, neumark.success_stderr);
  const double z_engines = std::abs(povm.success_rate - neumark.success_rate) / combined;
  ok = ok && z_engines <= 5.0;
  detail << "engine z " << z_engines << " (limit 5)";
  return {ok, detail.str()};
}

Verdict ordering_claim() {
  double worst = 0.0;
  int checked = 0;
  bool all_equal_regime = true;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 6);
    const ProductInstance random = mixed_instance(n, derive_seed(8008, i));
    const ProductInstance instance(random.parties(), Priors(0.5, 0.5));
    const OrderChoice heuristic = best_order(instance, OrderMode::AscendingOverlap);
    for (const StepRecord& step : run_protocol(instance, heuristic.order).transcript) {
      all_equal_regime = all_equal_regime && (step.skipped || step.regime == Regime::EqualPosterior);
    }
    const OrderChoice exhaustive = best_order(instance, OrderMode::Exhaustive);
    worst = std::max(worst, std::abs(heuristic.expected_measurements - exhaustive.expected_measurements));
    ++checked;
  }

  int general = 0;
  int agree = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 5);
    const ProductInstance instance = mixed_instance(n, derive_seed(8009, i));
    const double h = best_order(instance, OrderMode::AscendingOverlap).expected_measurements;
    const double e = best_order(instance, OrderMode::Exhaustive).expected_measurements;
    ++general;
    if (h <= e + 1e-12) ++agree;
  }
  std::cout << "[INFO] AC8 general priors: ascending order optimal on " << agree << "/" << general
            << " random instances (agreement rate " << static_cast<double>(agree) / general << ")\n";
  return {worst <= 1e-12 && all_equal_regime,
          std::to_string(checked) + " equal-prior instances, max |E_asc - E_min| = " + sci(worst) +
              " (tol 1e-12)"};
}

Verdict grouping_invariance() {
  const Partition partitions[] = {{{0, 1}, {2}}, {{0}, {1, 2}}, {{0, 1, 2}}};
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const ProductInstance instance = mixed_instance(3, derive_seed(9009, i));
    const double ungrouped = run_protocol(instance, Order::identity(3)).p_success;
    for (const Partition& partition : partitions) {
      const ProductInstance grouped = group(instance, partition);
      worst = std::max(worst, std::abs(run_protocol(grouped, Order::identity(grouped.size())).p_success -
                                       ungrouped));
    }
  }
  return {worst <= 1e-12, "100 instances x 3 partitions, max deviation " + sci(worst) + " (tol 1e-12)"};
}

std::string capture(const std::string& command, int* status) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  std::string out;
  if (!pipe) {
    *status = -1;
    return out;
  }
  char buffer[4096];
  std::size_t read = 0;
  while ((read = std::fread(buffer, 1, sizeof buffer, pipe.get())) > 0) out.append(buffer, read);
  *status = pclose(pipe.release());
  return out;
}

Verdict determinism(const std::string& binary, const std::string& scenario) {
  if (binary.empty()) return {false, "no uqsd binary given"};
  const std::string commands[] = {
      binary + " verify --seed 7 --count 50",
      binary + " simulate --scenario " + scenario + " --trials 100000 --seed 5 --engine povm",
      binary + " simulate --scenario " + scenario + " --trials 100000 --seed 5 --engine neumark",
  };
  bool ok = true;
  std::size_t bytes = 0;
  for (const std::string& command : commands) {
    int first_status = 0;
    int second_status = 0;
    const std::string first = capture(command, &first_status);
    const std::string second = capture(command, &second_status);
    ok = ok && first_status == 0 && second_status == 0 && !first.empty() && first == second;
    bytes += first.size();
  }
  return {ok, "verify + 2 simulate reports identical across runs (" + std::to_string(bytes) + " bytes)"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "";
  const std::string scenario = argc > 2 ? argv[2] : "";
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"AC1 optimal strategy matches grid oracle", oracle_optimality},
      {"AC2 local protocol equals global optimum", locc_equals_global},
      {"AC3 tripartite worked value", tripartite_value},
      {"AC4 regime boundary continuity", regime_boundary},
      {"AC5 failure posteriors", posterior_correctness},
      {"AC6 POVM and Neumark soundness", physical_layer},
      {"AC7 Monte Carlo agreement", monte_carlo},
      {"AC8 ascending order minimizes measurements", ordering_claim},
      {"AC9 grouping invariance", grouping_invariance},
      {"AC10 deterministic reports", [&] { return determinism(binary, scenario); }},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict verdict{false, ""};
    try {
      verdict = check();
    } catch (const std::exception& e) {
      verdict = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (verdict.passed ? "[PASS] " : "[FAIL] ") << name << ": " << verdict.detail << '\n';
    if (!verdict.passed) ++failures;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
