// Copyright 2026 The loqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace loqc {

/// Bad input from a caller: wrong sizes, non-normalized amplitudes,
/// non-unitary matrices, malformed files.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A count does not fit the index type.
class CapacityError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Something the library guarantees did not hold. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A teleportation pattern that has no phase correction (a failure branch).
class NotCorrectable : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace loqc
