// Copyright 2026 The Ramify Authors. All rights reserved.
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

#ifndef RAMIFY_ERROR_HPP_
#define RAMIFY_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ramify {

// Bad input: malformed text, non-prime characteristic, field mismatch,
// violated preconditions. The CLI maps these to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input was fine but the computation could not finish within its
// configured bounds (extension degree, search budget). Exit code 1.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SplittingError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class BudgetError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace ramify

#endif  // RAMIFY_ERROR_HPP_
