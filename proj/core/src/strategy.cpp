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
#include <algorithm>
#include <cmath>

#include "uqsd/errors.hpp"
#include "uqsd/pair_disc.hpp"
#include "uqsd/tolerances.hpp"

namespace uqsd {

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::EqualPosterior:
      return "equal_posterior";
    case Regime::Saturated:
      return "saturated";
  }
  return "unknown";
}

Strategy optimal_strategy(double c, const Priors& priors) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw InvalidInput("overlap must lie in [0, 1]");
  }
  Strategy out;
  out.overlap = c;
  out.swapped = priors.s() > priors.r();
  const double major = out.swapped ? priors.s() : priors.r();
  const double minor = out.swapped ? priors.r() : priors.s();

  double fail_major = 0.0;
  double fail_minor = 0.0;
  if (c == 0.0) {
    out.regime = Regime::EqualPosterior;
    out.p_success = 1.0;
  } else if (minor == 0.0) {
    // Limit of the saturated branch: the impossible state is never reported.
    out.regime = Regime::Saturated;
    fail_major = c * c;
    fail_minor = 1.0;
    out.p_success = major * (1.0 - c * c);
  } else if (std::sqrt(minor / major) >= c) {
    out.regime = Regime::EqualPosterior;
    fail_major = c * std::sqrt(minor / major);
    fail_minor = std::min(1.0, c * std::sqrt(major / minor));
    out.p_success = 1.0 - 2.0 * std::sqrt(major * minor) * c;
  } else {
    out.regime = Regime::Saturated;
    fail_major = c * c;
    fail_minor = 1.0;
    out.p_success = major * (1.0 - c * c);
  }
  out.p_success = std::clamp(out.p_success, 0.0, 1.0);
  out.p_fail = 1.0 - out.p_success;
  out.fail_p = out.swapped ? fail_minor : fail_major;
  out.fail_q = out.swapped ? fail_major : fail_minor;
  return out;
}

Priors failure_posterior(const Strategy& strategy, const Priors& priors) {
  const double from_p = priors.r() * strategy.fail_p;
  const double from_q = priors.s() * strategy.fail_q;
  const double p_fail = from_p + from_q;
  if (strategy.p_fail <= 0.0 || p_fail <= 0.0) {
    throw NoPosterior("strategy never fails; no posterior exists");
  }
  const double r = from_p / p_fail;
  return Priors(r, 1.0 - r);
}

}  // namespace uqsd
