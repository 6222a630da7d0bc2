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

#include "uqsd/pair_disc.hpp"

namespace uqsd {

/// Grid-search maximizer of r (1 - b) + s (1 - d) over the unitarity
/// boundary b d = c^2, b in [c^2, 1]. Shares no code with
/// optimal_strategy. A coarse grid of grid_points is followed by one fine
/// pass around the best cell at spacing <= 1e-8.
Strategy brute_force_strategy(double c, const Priors& priors, int grid_points);

struct RelaxedOptimum {
  double fail_p = 0.0;
  double fail_q = 0.0;
  double p_success = 0.0;
  // Grid spacing along each axis.
  double resolution = 0.0;
};

/// Maximizer over the whole admissible region b d >= c^2 on a
/// grid_points x grid_points grid. Used to confirm that the optimum lies on
/// the boundary b d = c^2.
RelaxedOptimum relaxed_grid_optimum(double c, const Priors& priors, int grid_points);

}  // namespace uqsd
