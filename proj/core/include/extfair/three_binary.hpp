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

#ifndef EXTFAIR_THREE_BINARY_HPP
#define EXTFAIR_THREE_BINARY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extfair/model.hpp"

/// EF1 for three agents with binary values under the no-chore condition
/// value(i, a, i) >= value(i, a, j).
///
/// Every item is described by its 3x3 type matrix M[i][j] = value(i, a, j).
/// Reduction rules assign items without creating envy until only a small
/// kernel remains; the kernel is solved by exhaustive search and items set
/// aside along the way are reinserted last.
namespace extfair::three_binary {

inline constexpr std::size_t kAgents = 3;
inline constexpr std::size_t kMaxKernel = 15;

class TypeMatrix {
 public:
  TypeMatrix() = default;
  /// Throws UnsupportedInstance on a non-binary entry or a row whose
  /// diagonal is below another entry.
  explicit TypeMatrix(const std::array<std::array<int, 3>, 3>& cells);

  [[nodiscard]] int at(AgentId row, AgentId column) const { return cells_[row][column]; }
  /// M[i][i] - M[i][j], always 0 or 1.
  [[nodiscard]] int delta(AgentId i, AgentId j) const { return cells_[i][i] - cells_[i][j]; }
  /// Row-major 9-bit encoding; equal codes mean the same type.
  [[nodiscard]] std::uint16_t code() const;
  /// Row i is constant: agent i does not care who owns the item.
  [[nodiscard]] bool indifferent(AgentId i) const { return delta(i, 0) == 0 && delta(i, 1) == 0 && delta(i, 2) == 0; }

  friend bool operator==(const TypeMatrix&, const TypeMatrix&) = default;

 private:
  std::array<std::array<int, 3>, 3> cells_{};
};

/// Category x_B, B = rows having two zeros, plus the variant index of the
/// matrix within its category when it is one of the 18 types that survive
/// the single-item rules.
struct TypeCategory {
  std::uint8_t rows = 0;  // bit i set: row i has two zeros
  std::optional<int> variant;

  /// "x_123^0", "x_12^1", "x_0^1"; no superscript when `variant` is empty.
  [[nodiscard]] std::string label() const;
  friend bool operator==(const TypeCategory&, const TypeCategory&) = default;
};

/// Throws UnsupportedInstance unless the instance has 3 agents, binary
/// values and satisfies no-chore.
void validate(const Instance& inst);

TypeMatrix type_matrix(const Instance& inst, ItemId item);
TypeCategory classify(const TypeMatrix& matrix);

/// The 18 types left when no column and no row is all ones and the
/// diagonal is all ones, in category order x_123, x_12, x_13, x_23, x_1,
/// x_2, x_3, x_0.
const std::vector<TypeMatrix>& residual_types();

// ---------------------------------------------------------------------------
// Envy bookkeeping

/// margins[p][q] = sum over p's items of delta(p, q) minus the same over q's
/// items. Negative means p envies q. Items without an owner are ignored.
using Margins = std::array<std::array<int, 3>, 3>;

Margins margins(std::span<const TypeMatrix> items, std::span<const std::optional<AgentId>> owners);

/// No ordered pair has a negative margin.
bool envy_free(const Margins& m);
/// Every margin is at least -1 (with binary deltas this is exactly EF1).
bool ef1(const Margins& m);
/// EF1 and no two agents envy each other at the same time.
bool ef1_no_mutual_envy(const Margins& m);

// ---------------------------------------------------------------------------
// Reductions

enum class Rule {
  ColumnOfOnes = 1,  // R1: item goes to an owner nobody minds
  ZeroDiagonal = 2,  // R2: some agent is indifferent because it values the item at 0
  RowOfOnes = 3,     // R3: some agent is indifferent because it values the item at 1
  SameTypeTriples = 4,
  Tuple = 5,  // one item each of x_1, x_2, x_3 to agents 1, 2, 3
  EnvyFreePair = 6,
};

std::string rule_name(Rule rule);

struct TraceStep {
  Rule rule = Rule::ColumnOfOnes;
  std::vector<ItemId> items;
  /// Parallel to `items`; empty when the item was set aside in a pool.
  std::vector<AgentId> owners;
  /// For R2/R3: the indifferent agent whose pool the step touched.
  std::optional<AgentId> pool;
};

/// Item set aside for the agent that does not care about it; it goes to
/// one of the other two agents at the end.
struct Leftover {
  ItemId item = 0;
  AgentId indifferent = 0;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;
  std::vector<ItemId> kernel;
  std::vector<Leftover> leftovers;
};

struct ReductionResult {
  /// Owner per item, empty for kernel items and leftovers.
  std::vector<std::optional<AgentId>> owners;
  std::vector<ItemId> kernel;
  std::vector<Leftover> leftovers;
  ReductionTrace trace;
};

/// Applies rules R1..R6 round-robin until none applies. Assigned items
/// contribute no envy among themselves and never lower any margin.
ReductionResult apply_reductions(const Instance& inst);

/// First assignment (item order, agents 1, 2, 3) of `items` that is EF1
/// with no mutual envy. Throws SolverError when there are more than
/// kMaxKernel items or none qualifies.
std::vector<AgentId> solve_kernel(std::span<const TypeMatrix> items);
/// Same, for a validated instance whose items are all kernel items.
Allocation solve_kernel(const Instance& kernel);

/// Completes `owners` by giving each leftover to one of the two agents
/// other than its indifferent agent: the one envying the other, else the
/// lower index. If the result is not EF1, every combination of leftover
/// placements is tried. Throws SolverError when none is EF1.
Allocation reinsert_leftovers(const Instance& inst, std::vector<std::optional<AgentId>> owners,
                              const std::vector<Leftover>& leftovers);

struct Solution {
  Allocation allocation;
  ReductionTrace trace;
};

Solution solve_traced(const Instance& inst);
Allocation solve_three_binary(const Instance& inst);

// ---------------------------------------------------------------------------
// Kernel families

/// No rule R4..R6 applies to this multiset of residual types.
bool is_fixpoint(std::span<const TypeMatrix> items);

/// Every multiset of residual types with multiplicities in 1..max_multiplicity
/// that is a fixpoint of the rules, each as a list of matrices.
std::vector<std::vector<TypeMatrix>> kernel_configurations(int max_multiplicity = 2);

}  // namespace extfair::three_binary

#endif  // EXTFAIR_THREE_BINARY_HPP
