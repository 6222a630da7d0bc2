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

namespace uqsd {

// Norms, overlaps and exact-in-principle identities.
inline constexpr double kNormTol = 1e-12;
// Probabilities derived through several arithmetic steps.
inline constexpr double kProbTol = 1e-9;

// Overlaps this close to 1 are treated as identical local states.
inline bool is_degenerate_overlap(double c) { return c >= 1.0 - kNormTol; }

}  // namespace uqsd
