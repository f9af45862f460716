// Copyright 2026 The extfair Authors
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

#ifndef EXTFAIR_ERRORS_HPP
#define EXTFAIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace extfair {

/// Malformed or inconsistent input data. `path()` is a JSON pointer-like
/// location ("/values/1/2") when the error came from a document.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& message, std::string path = {})
      : std::runtime_error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}
  [[nodiscard]] const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// An exhaustive procedure would exceed its configured outcome budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The instance is outside the domain an algorithm is defined for
/// (wrong agent count, non-binary values, asymmetric valuations, ...).
class UnsupportedInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A solver reached a state its correctness argument rules out.
class SolverError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace extfair

#endif  // EXTFAIR_ERRORS_HPP
