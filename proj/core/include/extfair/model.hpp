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

#ifndef EXTFAIR_MODEL_HPP
#define EXTFAIR_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extfair/rational.hpp"

namespace extfair {

using Value = Rational;
using AgentId = std::size_t;  // 0-based
using ItemId = std::size_t;   // index into Instance::items()

/// n agents, m items, additive valuations with externalities.
///
/// value(i, a, j) is the value agent i derives when item a is owned by
/// agent j. Immutable after construction.
class Instance {
 public:
  Instance() = default;

  /// `values[i][a][j]`; throws InputError on shape mismatch or duplicate
  /// item names.
  Instance(std::size_t agents, std::vector<std::string> items,
           const std::vector<std::vector<std::vector<Value>>>& values);

  /// Flat layout, index `(i * m + a) * n + j`.
  Instance(std::size_t agents, std::vector<std::string> items, std::vector<Value> flat);

  [[nodiscard]] std::size_t agents() const noexcept { return agents_; }
  [[nodiscard]] std::size_t item_count() const noexcept { return items_.size(); }
  [[nodiscard]] const std::vector<std::string>& items() const noexcept { return items_; }
  [[nodiscard]] std::optional<ItemId> find_item(const std::string& name) const;

  [[nodiscard]] const Value& value(AgentId observer, ItemId item, AgentId owner) const {
    return values_[(observer * items_.size() + item) * agents_ + owner];
  }
  /// max_j value(i, a, j)
  [[nodiscard]] const Value& max_value(AgentId observer, ItemId item) const {
    return max_[observer * items_.size() + item];
  }
  /// min_j value(i, a, j)
  [[nodiscard]] const Value& min_value(AgentId observer, ItemId item) const {
    return min_[observer * items_.size() + item];
  }

  [[nodiscard]] bool is_binary() const;
  /// value(i, a, i) >= value(i, a, j) for all i, j, a.
  [[nodiscard]] bool is_no_chore() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  void validate_and_cache();

  std::size_t agents_ = 1;
  std::vector<std::string> items_;
  std::vector<Value> values_;
  std::vector<Value> max_;
  std::vector<Value> min_;
};

/// Complete assignment of every item to one agent. Bundles may be empty.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::vector<AgentId> owners) : owners_(std::move(owners)) {}

  /// Throws InputError unless `owners` covers every item of `inst` with an
  /// agent index in range.
  static Allocation checked(const Instance& inst, std::vector<AgentId> owners);

  [[nodiscard]] AgentId owner(ItemId item) const { return owners_[item]; }
  [[nodiscard]] std::size_t size() const noexcept { return owners_.size(); }
  [[nodiscard]] const std::vector<AgentId>& owners() const noexcept { return owners_; }
  [[nodiscard]] std::vector<ItemId> bundle(AgentId agent) const;
  [[nodiscard]] std::vector<std::vector<ItemId>> bundles(std::size_t agents) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<AgentId> owners_;
};

/// V_i(pi): sum over items of value(i, a, owner(a)).
Value total_value(const Instance& inst, const Allocation& alloc, AgentId agent);

/// The allocation with the bundles of `i` and `j` exchanged. Throws
/// std::invalid_argument when i == j.
Allocation swap(const Allocation& alloc, AgentId i, AgentId j);

// ---------------------------------------------------------------------------
// Public decision making

struct Issue {
  std::string name;
  std::vector<std::string> choices;
  /// values[agent][choice]
  std::vector<std::vector<Value>> values;

  friend bool operator==(const Issue&, const Issue&) = default;
};

class PdmInstance {
 public:
  PdmInstance() = default;
  /// Throws InputError on an empty choice set or a value matrix that is not
  /// agents x |choices|.
  PdmInstance(std::size_t agents, std::vector<Issue> issues);

  [[nodiscard]] std::size_t agents() const noexcept { return agents_; }
  [[nodiscard]] const std::vector<Issue>& issues() const noexcept { return issues_; }
  [[nodiscard]] std::size_t issue_count() const noexcept { return issues_.size(); }

  [[nodiscard]] Value max_value(AgentId agent, std::size_t issue) const;
  [[nodiscard]] Value min_value(AgentId agent, std::size_t issue) const;

  friend bool operator==(const PdmInstance&, const PdmInstance&) = default;

 private:
  std::size_t agents_ = 1;
  std::vector<Issue> issues_;
};

/// One selected choice index per issue.
struct PdmOutcome {
  std::vector<std::size_t> choices;

  friend bool operator==(const PdmOutcome&, const PdmOutcome&) = default;
};

/// Throws InputError if the outcome does not select exactly one valid
/// choice per issue.
void validate_outcome(const PdmInstance& pdm, const PdmOutcome& outcome);

Value total_value(const PdmInstance& pdm, const PdmOutcome& outcome, AgentId agent);

/// One issue per item, choice j meaning "item goes to agent j".
PdmInstance to_public_decision(const Instance& inst);

/// The bijection between allocations and outcomes of to_public_decision(inst).
PdmOutcome to_outcome(const Allocation& alloc);
Allocation to_allocation(const PdmOutcome& outcome);

// ---------------------------------------------------------------------------
// Random instances

struct GeneratorOptions {
  std::size_t agents = 2;
  std::size_t items = 0;
  std::int64_t min_value = 0;
  std::int64_t max_value = 1;
  bool binary = false;    // values drawn from {0, 1}
  bool no_chore = false;  // raise value(i, a, i) to max_j value(i, a, j)
  bool nonneg = false;    // clamp the lower bound at 0
  std::uint64_t seed = 42;
};

/// Deterministic for a fixed seed. Throws std::invalid_argument when the
/// effective integer range is empty or agents == 0.
Instance random_instance(const GeneratorOptions& options);

}  // namespace extfair

#endif  // EXTFAIR_MODEL_HPP
