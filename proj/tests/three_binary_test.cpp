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

#include <gtest/gtest.h>

#include <set>

#include "extfair/errors.hpp"
#include "extfair/fairness.hpp"
#include "extfair/known_instances.hpp"
#include "extfair/three_binary.hpp"
#include "support/naive.hpp"

namespace extfair {
namespace {

using three_binary::Rule;
using three_binary::TypeMatrix;

Instance random_binary(std::uint64_t seed, std::size_t items) {
  GeneratorOptions o;
  o.agents = 3;
  o.items = items;
  o.binary = true;
  o.no_chore = true;
  o.seed = seed;
  return random_instance(o);
}

// Instance whose items have the given type matrices, named t0, t1, ...
Instance from_types(const std::vector<TypeMatrix>& types) {
  std::vector<std::string> names;
  std::vector<Value> flat(3 * types.size() * 3);
  for (std::size_t a = 0; a < types.size(); ++a) names.push_back("t" + std::to_string(a));
  for (AgentId i = 0; i < 3; ++i) {
    for (std::size_t a = 0; a < types.size(); ++a) {
      for (AgentId j = 0; j < 3; ++j) flat[(i * types.size() + a) * 3 + j] = Value(types[a].at(i, j));
    }
  }
  return Instance(3, names, flat);
}

TypeMatrix type(std::array<std::array<int, 3>, 3> cells) { return TypeMatrix(cells); }

TEST(TypeMatrixTest, ValidatesCells) {
  EXPECT_THROW(type({{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}}), UnsupportedInstance);
  EXPECT_THROW(type({{{0, 1, 0}, {0, 1, 0}, {0, 0, 1}}}), UnsupportedInstance);
  const TypeMatrix t = type({{{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}});
  EXPECT_EQ(t.delta(0, 1), 1);
  EXPECT_EQ(t.delta(0, 2), 0);
  EXPECT_TRUE(t.indifferent(2));
  EXPECT_FALSE(t.indifferent(0));
  EXPECT_NE(t.code(), type({{{1, 0, 0}, {0, 1, 1}, {0, 0, 0}}}).code());
}

TEST(TypeMatrixTest, ResidualTypes) {
  const auto& types = three_binary::residual_types();
  ASSERT_EQ(types.size(), 18u);
  std::set<std::uint16_t> codes;
  for (const TypeMatrix& t : types) {
    codes.insert(t.code());
    for (AgentId i = 0; i < 3; ++i) {
      EXPECT_EQ(t.at(i, i), 1);
      EXPECT_FALSE(t.indifferent(i));
    }
    for (AgentId j = 0; j < 3; ++j) {
      EXPECT_FALSE(t.at(0, j) == 1 && t.at(1, j) == 1 && t.at(2, j) == 1);
    }
    EXPECT_TRUE(three_binary::classify(t).variant.has_value());
  }
  EXPECT_EQ(codes.size(), 18u);

  // Brute force: every binary no-chore matrix with a unit diagonal, no
  // constant row and no column of ones is residual.
  std::size_t count = 0;
  for (int bits = 0; bits < 64; ++bits) {
    std::array<std::array<int, 3>, 3> cells{};
    int b = 0;
    for (AgentId i = 0; i < 3; ++i) {
      for (AgentId j = 0; j < 3; ++j) cells[i][j] = i == j ? 1 : (bits >> b++) & 1;
    }
    const TypeMatrix t(cells);
    bool residual = true;
    for (AgentId i = 0; i < 3; ++i) residual = residual && !t.indifferent(i);
    for (AgentId j = 0; j < 3; ++j) residual = residual && !(cells[0][j] && cells[1][j] && cells[2][j]);
    if (residual) {
      ++count;
      EXPECT_TRUE(codes.count(t.code()));
    }
  }
  EXPECT_EQ(count, 18u);
}

TEST(TypeMatrixTest, CategoryLabels) {
  const TypeMatrix identity = type({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  const auto c = three_binary::classify(identity);
  EXPECT_EQ(c.rows, 0b111);
  EXPECT_EQ(c.label().rfind("x_123", 0), 0u);
  const TypeMatrix none = type({{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}});
  EXPECT_EQ(three_binary::classify(none).rows, 0);
  EXPECT_EQ(three_binary::classify(none).label().rfind("x_0", 0), 0u);
  const TypeMatrix column = type({{{1, 1, 0}, {0, 1, 0}, {0, 1, 1}}});
  EXPECT_FALSE(three_binary::classify(column).variant);
  EXPECT_EQ(three_binary::classify(column).label(), "x_2");
}

TEST(MarginsTest, CountsDeltas) {
  const TypeMatrix identity = type({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  std::vector<TypeMatrix> items{identity, identity};
  std::vector<std::optional<AgentId>> owners{AgentId{0}, AgentId{0}};
  auto m = three_binary::margins(items, owners);
  EXPECT_EQ(m[0][1], 2);
  EXPECT_EQ(m[1][0], -2);
  EXPECT_FALSE(three_binary::ef1(m));
  owners[1] = AgentId{1};
  m = three_binary::margins(items, owners);
  EXPECT_EQ(m[2][0], -1);  // agent 3 holds nothing and wants either item
  EXPECT_FALSE(three_binary::envy_free(m));
  items.push_back(identity);
  owners.push_back(AgentId{2});
  EXPECT_TRUE(three_binary::envy_free(three_binary::margins(items, owners)));
  items.pop_back();
  owners.pop_back();
  owners[1].reset();
  m = three_binary::margins(items, owners);
  EXPECT_EQ(m[1][0], -1);
  EXPECT_TRUE(three_binary::ef1(m));
  EXPECT_TRUE(three_binary::ef1_no_mutual_envy(m));
}

TEST(ValidateTest, RejectsOtherInstances) {
  EXPECT_THROW(three_binary::solve_three_binary(known::no_efx_instance()), UnsupportedInstance);
  EXPECT_THROW(three_binary::solve_three_binary(known::swap_envy_instance()), UnsupportedInstance);
  const Instance chore(3, {"a"}, {{{0, 1, 0}}, {{0, 1, 0}}, {{0, 0, 1}}});
  EXPECT_THROW(three_binary::solve_three_binary(chore), UnsupportedInstance);
}

TEST(ReductionTest, ColumnOfOnesGoesToThatOwner) {
  const Instance inst = from_types({type({{{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}})});
  const auto r = three_binary::apply_reductions(inst);
  ASSERT_EQ(r.trace.steps.size(), 1u);
  EXPECT_EQ(r.trace.steps[0].rule, Rule::ColumnOfOnes);
  EXPECT_EQ(r.owners[0], std::optional<AgentId>(2));
  EXPECT_TRUE(r.kernel.empty());
}

TEST(ReductionTest, IndifferentAgentPoolCancelsPairs) {
  // Agent 3 values the item at zero everywhere; agents 1 and 2 each want it.
  const TypeMatrix t = type({{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}});
  const Instance one = from_types({t});
  auto r = three_binary::apply_reductions(one);
  ASSERT_EQ(r.leftovers.size(), 1u);
  EXPECT_EQ(r.leftovers[0].indifferent, 2u);
  EXPECT_TRUE(r.trace.steps[0].owners.empty());

  const Instance two = from_types({t, t});
  r = three_binary::apply_reductions(two);
  EXPECT_TRUE(r.leftovers.empty());
  ASSERT_TRUE(r.owners[0] && r.owners[1]);
  EXPECT_NE(*r.owners[0], *r.owners[1]);
  EXPECT_EQ(r.trace.steps.back().rule, Rule::ZeroDiagonal);
  EXPECT_EQ(r.trace.steps.back().pool, std::optional<AgentId>(2));

  const Instance three = from_types({t, t, t});
  r = three_binary::apply_reductions(three);
  EXPECT_EQ(r.leftovers.size(), 1u);
  const Allocation a = three_binary::solve_three_binary(three);
  EXPECT_TRUE(naive::ef_k(three, a, 1));
}

TEST(ReductionTest, RowOfOnesUsesThePool) {
  // Agent 1 does not care; agents 2 and 3 each want the item.
  const TypeMatrix t = type({{{1, 1, 1}, {0, 1, 0}, {1, 0, 1}}});
  auto r = three_binary::apply_reductions(from_types({t}));
  ASSERT_EQ(r.trace.steps.size(), 1u);
  EXPECT_EQ(r.trace.steps[0].rule, Rule::RowOfOnes);
  ASSERT_EQ(r.leftovers.size(), 1u);
  EXPECT_EQ(r.leftovers[0].indifferent, 0u);

  r = three_binary::apply_reductions(from_types({t, t}));
  EXPECT_TRUE(r.leftovers.empty());
  EXPECT_EQ(r.owners[0], std::optional<AgentId>(1));
  EXPECT_EQ(r.owners[1], std::optional<AgentId>(2));
}

TEST(ReductionTest, SameTypeTriplesSpread) {
  const TypeMatrix identity = type({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  const auto r = three_binary::apply_reductions(from_types({identity, identity, identity}));
  ASSERT_EQ(r.trace.steps.size(), 1u);
  EXPECT_EQ(r.trace.steps[0].rule, Rule::SameTypeTriples);
  std::set<AgentId> owners(r.trace.steps[0].owners.begin(), r.trace.steps[0].owners.end());
  EXPECT_EQ(owners.size(), 3u);
}

TEST(ReductionTest, AssignedItemsNeverCreateEnvy) {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const Instance inst = random_binary(seed, seed % 31);
    const auto r = three_binary::apply_reductions(inst);
    std::vector<TypeMatrix> types;
    for (ItemId a = 0; a < inst.item_count(); ++a) types.push_back(three_binary::type_matrix(inst, a));
    EXPECT_TRUE(three_binary::envy_free(three_binary::margins(types, r.owners))) << seed;

    // Kernel: residual types at a fixpoint, small.
    std::vector<TypeMatrix> kernel;
    for (ItemId a : r.kernel) {
      kernel.push_back(types[a]);
      EXPECT_TRUE(three_binary::classify(types[a]).variant) << seed;
    }
    EXPECT_TRUE(three_binary::is_fixpoint(kernel)) << seed;
    EXPECT_LE(kernel.size(), 12u) << seed;

    // At most one leftover per indifferent agent.
    std::set<AgentId> pools;
    for (const auto& l : r.leftovers) EXPECT_TRUE(pools.insert(l.indifferent).second) << seed;

    // Every item is accounted for exactly once.
    std::size_t placed = 0;
    for (const auto& o : r.owners) placed += o.has_value();
    EXPECT_EQ(placed + r.kernel.size() + r.leftovers.size(), inst.item_count()) << seed;
  }
}

TEST(KernelTest, SolvesEveryFixpointConfiguration) {
  const auto configs = three_binary::kernel_configurations(2);
  ASSERT_FALSE(configs.empty());
  std::size_t largest = 0;
  for (const auto& items : configs) {
    largest = std::max(largest, items.size());
    EXPECT_TRUE(three_binary::is_fixpoint(items));
    const auto owners = three_binary::solve_kernel(items);
    std::vector<std::optional<AgentId>> opt(owners.begin(), owners.end());
    EXPECT_TRUE(three_binary::ef1_no_mutual_envy(three_binary::margins(items, opt)));
  }
  EXPECT_LE(largest, 12u);
}

TEST(KernelTest, MarginsMatchNaiveOnKernelInstances) {
  const auto configs = three_binary::kernel_configurations(2);
  for (std::size_t c = 0; c < configs.size(); c += 97) {
    const Instance inst = from_types(configs[c]);
    const Allocation a = three_binary::solve_kernel(inst);
    EXPECT_TRUE(naive::ef_k(inst, a, 1)) << c;
  }
}

TEST(KernelTest, RejectsOversizedKernel) {
  std::vector<TypeMatrix> items(16, three_binary::residual_types()[0]);
  EXPECT_THROW(three_binary::solve_kernel(items), SolverError);
}

TEST(SolveTest, RandomInstancesAreEf1) {
  for (std::uint64_t seed = 0; seed < 1500; ++seed) {
    const Instance inst = random_binary(seed, seed % 9);
    const Allocation a = three_binary::solve_three_binary(inst);
    EXPECT_TRUE(naive::ef_k(inst, a, 1)) << seed;
  }
}

TEST(SolveTest, TraceReplaysToAllocation) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Instance inst = random_binary(seed, 20);
    const auto sol = three_binary::solve_traced(inst);
    for (const auto& step : sol.trace.steps) {
      for (std::size_t t = 0; t < step.owners.size(); ++t) {
        EXPECT_EQ(sol.allocation.owner(step.items[t]), step.owners[t]) << seed;
      }
    }
    for (const auto& l : sol.trace.leftovers) {
      EXPECT_NE(sol.allocation.owner(l.item), l.indifferent) << seed;
    }
  }
}

}  // namespace
}  // namespace extfair
