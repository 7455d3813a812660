// Copyright 2026 The mmnav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MMNAV_ERRORS_HPP
#define MMNAV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mmnav {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid parameters, malformed files, inconsistent scenarios.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejection sampling ran out of retries.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A start/goal query node could not be joined to the roadmap.
class QueryIsolatedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoPathError : public std::runtime_error {
 public:
  explicit NoPathError(std::size_t explored)
      : std::runtime_error("no path: explored " + std::to_string(explored) + " nodes"),
        explored_(explored) {}
  std::size_t explored() const { return explored_; }

 private:
  std::size_t explored_;
};

/// Grid search started from an Occupied or out-of-grid cell.
class InvalidStartError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation called in the wrong locomotion mode or illegal phase change.
class StateMachineError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mmnav

#endif  // MMNAV_ERRORS_HPP
