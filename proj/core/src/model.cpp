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

#include "extfair/model.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "extfair/errors.hpp"

namespace extfair {

Instance::Instance(std::size_t agents, std::vector<std::string> items,
                   const std::vector<std::vector<std::vector<Value>>>& values)
    : agents_(agents), items_(std::move(items)) {
  if (agents_ == 0) throw InputError("at least one agent is required", "/agents");
  if (values.size() != agents_) {
    throw InputError("expected " + std::to_string(agents_) + " observer rows, got " +
                         std::to_string(values.size()),
                     "/values");
  }
  const std::size_t m = items_.size();
  values_.reserve(agents_ * m * agents_);
  for (std::size_t i = 0; i < agents_; ++i) {
    if (values[i].size() != m) {
      throw InputError("expected " + std::to_string(m) + " item entries, got " +
                           std::to_string(values[i].size()),
                       "/values/" + std::to_string(i));
    }
    for (std::size_t a = 0; a < m; ++a) {
      if (values[i][a].size() != agents_) {
        throw InputError("expected " + std::to_string(agents_) + " owner entries, got " +
                             std::to_string(values[i][a].size()),
                         "/values/" + std::to_string(i) + "/" + std::to_string(a));
      }
      values_.insert(values_.end(), values[i][a].begin(), values[i][a].end());
    }
  }
  validate_and_cache();
}

Instance::Instance(std::size_t agents, std::vector<std::string> items, std::vector<Value> flat)
    : agents_(agents), items_(std::move(items)), values_(std::move(flat)) {
  if (agents_ == 0) throw InputError("at least one agent is required", "/agents");
  if (values_.size() != agents_ * items_.size() * agents_) {
    throw InputError("value tensor has " + std::to_string(values_.size()) + " entries, expected " +
                         std::to_string(agents_ * items_.size() * agents_),
                     "/values");
  }
  validate_and_cache();
}

void Instance::validate_and_cache() {
  std::unordered_set<std::string> seen;
  for (std::size_t a = 0; a < items_.size(); ++a) {
    if (!seen.insert(items_[a]).second) {
      throw InputError("duplicate item '" + items_[a] + "'", "/items/" + std::to_string(a));
    }
  }
  const std::size_t m = items_.size();
  max_.resize(agents_ * m);
  min_.resize(agents_ * m);
  for (std::size_t i = 0; i < agents_; ++i) {
    for (std::size_t a = 0; a < m; ++a) {
      auto first = values_.begin() + static_cast<std::ptrdiff_t>((i * m + a) * agents_);
      auto [lo, hi] = std::minmax_element(first, first + static_cast<std::ptrdiff_t>(agents_));
      min_[i * m + a] = *lo;
      max_[i * m + a] = *hi;
    }
  }
}

std::optional<ItemId> Instance::find_item(const std::string& name) const {
  auto it = std::find(items_.begin(), items_.end(), name);
  if (it == items_.end()) return std::nullopt;
  return static_cast<ItemId>(it - items_.begin());
}

bool Instance::is_binary() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Value& v) { return v == Value(0) || v == Value(1); });
}

bool Instance::is_no_chore() const {
  for (std::size_t i = 0; i < agents_; ++i) {
    for (std::size_t a = 0; a < items_.size(); ++a) {
      if (value(i, a, i) != max_value(i, a)) return false;
    }
  }
  return true;
}

Allocation Allocation::checked(const Instance& inst, std::vector<AgentId> owners) {
  if (owners.size() != inst.item_count()) {
    throw InputError("allocation covers " + std::to_string(owners.size()) + " items, instance has " +
                         std::to_string(inst.item_count()),
                     "/assignment");
  }
  for (std::size_t a = 0; a < owners.size(); ++a) {
    if (owners[a] >= inst.agents()) {
      throw InputError("agent " + std::to_string(owners[a] + 1) + " out of range",
                       "/assignment/" + inst.items()[a]);
    }
  }
  return Allocation(std::move(owners));
}

std::vector<ItemId> Allocation::bundle(AgentId agent) const {
  std::vector<ItemId> out;
  for (std::size_t a = 0; a < owners_.size(); ++a) {
    if (owners_[a] == agent) out.push_back(a);
  }
  return out;
}

std::vector<std::vector<ItemId>> Allocation::bundles(std::size_t agents) const {
  std::vector<std::vector<ItemId>> out(agents);
  for (std::size_t a = 0; a < owners_.size(); ++a) out[owners_[a]].push_back(a);
  return out;
}

Value total_value(const Instance& inst, const Allocation& alloc, AgentId agent) {
  Value sum;
  for (std::size_t a = 0; a < alloc.size(); ++a) sum += inst.value(agent, a, alloc.owner(a));
  return sum;
}

Allocation swap(const Allocation& alloc, AgentId i, AgentId j) {
  if (i == j) throw std::invalid_argument("swap requires two distinct agents");
  std::vector<AgentId> owners = alloc.owners();
  for (auto& owner : owners) {
    if (owner == i) {
      owner = j;
    } else if (owner == j) {
      owner = i;
    }
  }
  return Allocation(std::move(owners));
}

PdmInstance::PdmInstance(std::size_t agents, std::vector<Issue> issues)
    : agents_(agents), issues_(std::move(issues)) {
  if (agents_ == 0) throw InputError("at least one agent is required", "/agents");
  for (std::size_t a = 0; a < issues_.size(); ++a) {
    const Issue& issue = issues_[a];
    const std::string path = "/issues/" + std::to_string(a);
    if (issue.choices.empty()) throw InputError("issue has no choices", path + "/choices");
    if (issue.values.size() != agents_) {
      throw InputError("expected " + std::to_string(agents_) + " agent rows, got " +
                           std::to_string(issue.values.size()),
                       path + "/values");
    }
    for (std::size_t i = 0; i < agents_; ++i) {
      if (issue.values[i].size() != issue.choices.size()) {
        throw InputError("expected " + std::to_string(issue.choices.size()) + " choice values, got " +
                             std::to_string(issue.values[i].size()),
                         path + "/values/" + std::to_string(i));
      }
    }
  }
}

Value PdmInstance::max_value(AgentId agent, std::size_t issue) const {
  const auto& row = issues_[issue].values[agent];
  return *std::max_element(row.begin(), row.end());
}

Value PdmInstance::min_value(AgentId agent, std::size_t issue) const {
  const auto& row = issues_[issue].values[agent];
  return *std::min_element(row.begin(), row.end());
}

void validate_outcome(const PdmInstance& pdm, const PdmOutcome& outcome) {
  if (outcome.choices.size() != pdm.issue_count()) {
    throw InputError("outcome covers " + std::to_string(outcome.choices.size()) +
                         " issues, instance has " + std::to_string(pdm.issue_count()),
                     "/choices");
  }
  for (std::size_t a = 0; a < outcome.choices.size(); ++a) {
    if (outcome.choices[a] >= pdm.issues()[a].choices.size()) {
      throw InputError("choice index out of range", "/choices/" + pdm.issues()[a].name);
    }
  }
}

Value total_value(const PdmInstance& pdm, const PdmOutcome& outcome, AgentId agent) {
  Value sum;
  for (std::size_t a = 0; a < outcome.choices.size(); ++a) {
    sum += pdm.issues()[a].values[agent][outcome.choices[a]];
  }
  return sum;
}

PdmInstance to_public_decision(const Instance& inst) {
  const std::size_t n = inst.agents();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t j = 0; j < n; ++j) labels.push_back(std::to_string(j + 1));

  std::vector<Issue> issues;
  issues.reserve(inst.item_count());
  for (std::size_t a = 0; a < inst.item_count(); ++a) {
    Issue issue{inst.items()[a], labels, std::vector<std::vector<Value>>(n, std::vector<Value>(n))};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) issue.values[i][j] = inst.value(i, a, j);
    }
    issues.push_back(std::move(issue));
  }
  return PdmInstance(n, std::move(issues));
}

PdmOutcome to_outcome(const Allocation& alloc) { return PdmOutcome{alloc.owners()}; }

Allocation to_allocation(const PdmOutcome& outcome) { return Allocation(outcome.choices); }

Instance random_instance(const GeneratorOptions& options) {
  if (options.agents == 0) throw std::invalid_argument("random_instance: agents must be >= 1");
  std::int64_t lo = options.min_value;
  std::int64_t hi = options.max_value;
  if (options.binary) {
    lo = std::max<std::int64_t>(lo, 0);
    hi = std::min<std::int64_t>(hi, 1);
  }
  if (options.nonneg) lo = std::max<std::int64_t>(lo, 0);
  if (lo > hi) {
    throw std::invalid_argument("random_instance: value range [" + std::to_string(options.min_value) +
                                ", " + std::to_string(options.max_value) +
                                "] is empty under the requested flags");
  }

  const std::size_t n = options.agents;
  const std::size_t m = options.items;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);

  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t a = 0; a < m; ++a) names.push_back("g" + std::to_string(a + 1));

  std::vector<Value> flat(n * m * n);
  for (auto& v : flat) v = Value(dist(rng));
  if (options.no_chore) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t a = 0; a < m; ++a) {
        auto row = flat.begin() + static_cast<std::ptrdiff_t>((i * m + a) * n);
        row[static_cast<std::ptrdiff_t>(i)] = *std::max_element(row, row + static_cast<std::ptrdiff_t>(n));
      }
    }
  }
  return Instance(n, std::move(names), std::move(flat));
}

}  // namespace extfair
