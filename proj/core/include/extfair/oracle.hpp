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

#ifndef EXTFAIR_ORACLE_HPP
#define EXTFAIR_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "extfair/fairness.hpp"
#include "extfair/model.hpp"

namespace extfair::oracle {

inline constexpr std::uint64_t kDefaultMaxOutcomes = 10'000'000;

/// n^m, or nullopt when it exceeds `cap`.
std::optional<std::uint64_t> outcome_count(std::size_t agents, std::size_t items, std::uint64_t cap);

/// Visits all n^m allocations in lexicographic order: the first item is the
/// most significant digit, agents counted 0..n-1. Stops early when the
/// visitor returns false. Throws CapacityError before visiting anything if
/// n^m > max_outcomes.
void for_each_allocation(std::size_t agents, std::size_t items, std::uint64_t max_outcomes,
                         const std::function<bool(const Allocation&)>& visit);

struct ExistenceResult {
  std::optional<Allocation> first;  // lexicographically first satisfying allocation
  std::uint64_t count = 0;          // satisfying allocations
  std::uint64_t total = 0;          // allocations examined (n^m)
};

ExistenceResult exists_allocation(const Instance& inst,
                                  const std::function<bool(const Allocation&)>& predicate,
                                  std::uint64_t max_outcomes = kDefaultMaxOutcomes);

ExistenceResult exists_allocation(const Instance& inst, const ConceptSpec& spec,
                                  std::uint64_t max_outcomes = kDefaultMaxOutcomes);

/// Unordered partitions of {0..m-1} into at most `blocks` possibly-empty
/// parts, each visited once, as restricted growth strings: label[0] == 0 and
/// every label is at most one more than the largest label before it.
class PartitionIterator {
 public:
  PartitionIterator(std::size_t items, std::size_t blocks);

  [[nodiscard]] const std::vector<std::size_t>& labels() const noexcept { return labels_; }
  /// Number of nonempty parts in the current partition.
  [[nodiscard]] std::size_t used_blocks() const noexcept;
  /// Advances; false once every partition has been visited.
  bool next();

 private:
  std::size_t blocks_;
  std::vector<std::size_t> labels_;
  std::vector<std::size_t> prefix_max_;  // max label in labels_[0..k]
};

/// min over the n! ways to hand the parts of `labels` to agents of the
/// value agent `observer` gets.
Value worst_assignment_value(const Instance& inst, AgentId observer,
                             const std::vector<std::size_t>& labels);

/// max over partitions of the worst assignment value. Throws CapacityError
/// when n^m > max_outcomes.
Value emms_exact(const Instance& inst, AgentId agent,
                 std::uint64_t max_outcomes = kDefaultMaxOutcomes);

// ---------------------------------------------------------------------------
// Implication audits

struct SamplerOptions {
  std::size_t min_agents = 2;
  std::size_t max_agents = 3;
  std::size_t min_items = 0;
  std::size_t max_items = 6;
  std::int64_t min_value = -5;
  std::int64_t max_value = 5;
  /// Share of trials whose allocation is drawn from those satisfying the
  /// premise (found by a cyclic scan from a random start) instead of
  /// uniformly at random.
  double conditioned_fraction = 0.5;
};

struct LatticeEdge {
  std::string name;
  ConceptSpec premise;
  ConceptSpec conclusion;  // KPProp with k == 0 means k = n
  SamplerOptions sampler;
  /// Only samples with sum_a min_j value(i, a, j) >= 0 for every i count.
  bool require_nonneg_floor = false;
};

struct Counterexample {
  Instance instance;
  Allocation allocation;
};

struct AuditResult {
  std::string edge;
  std::uint64_t trials = 0;
  std::uint64_t premise_held = 0;  // samples where the premise was true
  std::uint64_t filtered = 0;      // samples dropped by require_nonneg_floor
  std::uint64_t counterexamples = 0;
  std::optional<Counterexample> first_counterexample;
  std::optional<std::string> skipped;  // reason, e.g. a capacity guard
};

/// Samples (instance, allocation) pairs and counts those where the premise
/// holds but the conclusion does not.
AuditResult audit_implication(const LatticeEdge& edge, std::uint64_t trials, std::uint64_t seed);

/// Edges of the implication lattice checked by the default audit.
std::vector<LatticeEdge> lattice_edges();

struct NonEdgeResult {
  std::string name;
  std::string premise;
  std::string conclusion;
  bool confirmed = false;  // premise holds and conclusion fails
};

/// Known counterexamples: the two-item negative-value instance for
/// EF => PROP-Max and the three-agent single-item instance for EF =>
/// PROP-Max and EF => PROP-Ave.
std::vector<NonEdgeResult> confirm_non_edges();

struct LatticeAudit {
  std::vector<AuditResult> edges;
  std::vector<NonEdgeResult> non_edges;
  [[nodiscard]] bool passed() const;
};

LatticeAudit run_lattice_audit(std::uint64_t trials, std::uint64_t seed);

}  // namespace extfair::oracle

#endif  // EXTFAIR_ORACLE_HPP
