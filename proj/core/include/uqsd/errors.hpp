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

#include <stdexcept>
#include <string>

namespace uqsd {

/// Raised for arguments outside an operation's domain (bad dimension,
/// probability out of range, malformed permutation or partition).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The two local states coincide, so no measurement can separate them.
class DegeneratePair : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Strategy amplitudes do not satisfy |beta| |delta| = |<p|q>|.
class InconsistentStrategy : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A failure posterior was requested for a strategy that never fails.
class NoPosterior : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace uqsd
