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
#include "uqsd/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "uqsd/errors.hpp"

namespace uqsd {
namespace {

constexpr double kFineResolution = 1e-8;

struct BoundaryObjective {
  double c2;
  double r;
  double s;

  // Failure given q on the boundary b d = c^2.
  double partner(double b) const { return c2 == 0.0 ? 0.0 : std::min(1.0, c2 / b); }
  double operator()(double b) const { return r * (1.0 - b) + s * (1.0 - partner(b)); }
};

struct GridMax {
  double arg;
  double value;
  double spacing;
};

GridMax scan(const BoundaryObjective& f, double lo, double hi, long points) {
  GridMax best{lo, f(lo), (points > 1) ? (hi - lo) / static_cast<double>(points - 1) : 0.0};
  for (long i = 1; i < points; ++i) {
    const double b = (i == points - 1) ? hi : lo + best.spacing * static_cast<double>(i);
    const double value = f(b);
    if (value > best.value) {
      best.arg = b;
      best.value = value;
    }
  }
  return best;
}

void validate(double c, const Priors&, int grid_points) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw InvalidInput("overlap must lie in [0, 1]");
  }
  if (grid_points < 100) {
    throw InvalidInput("oracle needs at least 100 grid points");
  }
}

}  // namespace

Strategy brute_force_strategy(double c, const Priors& priors, int grid_points) {
  validate(c, priors, grid_points);
  const BoundaryObjective f{c * c, priors.r(), priors.s()};
  const double lo = f.c2;
  const double hi = 1.0;

  GridMax coarse = scan(f, lo, hi, grid_points);
  GridMax best = coarse;
  if (coarse.spacing > kFineResolution) {
    const double fine_lo = std::max(lo, coarse.arg - coarse.spacing);
    const double fine_hi = std::min(hi, coarse.arg + coarse.spacing);
    const auto points = static_cast<long>(std::ceil((fine_hi - fine_lo) / kFineResolution)) + 1;
    const GridMax fine = scan(f, fine_lo, fine_hi, std::max(points, 2L));
    if (fine.value >= best.value) best = fine;
  }

  Strategy out;
  out.overlap = c;
  out.swapped = priors.s() > priors.r();
  out.fail_p = best.arg;
  out.fail_q = f.partner(best.arg);
  out.p_success = best.value;
  out.p_fail = 1.0 - best.value;
  // A maximizer pinned to an end of the boundary means one state is never
  // identified.
  const bool at_edge = c > 0.0 && (best.arg - lo <= kFineResolution || hi - best.arg <= kFineResolution);
  out.regime = at_edge ? Regime::Saturated : Regime::EqualPosterior;
  return out;
}

RelaxedOptimum relaxed_grid_optimum(double c, const Priors& priors, int grid_points) {
  validate(c, priors, grid_points);
  const double c2 = c * c;
  const double step = 1.0 / static_cast<double>(grid_points - 1);
  RelaxedOptimum best{1.0, 1.0, 0.0, step};
  for (int i = 0; i < grid_points; ++i) {
    const double b = step * i;
    for (int j = 0; j < grid_points; ++j) {
      const double d = step * j;
      if (b * d < c2) continue;
      const double value = priors.r() * (1.0 - b) + priors.s() * (1.0 - d);
      if (value > best.p_success) {
        best.fail_p = b;
        best.fail_q = d;
        best.p_success = value;
      }
    }
  }
  return best;
}

}  // namespace uqsd
