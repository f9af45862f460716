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

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "extfair/fairness.hpp"
#include "extfair/maxmin_rr.hpp"
#include "support/naive.hpp"

namespace extfair {
namespace {

PdmInstance random_pdm(std::mt19937_64& rng, std::size_t agents, std::size_t issues, std::size_t max_choices) {
  std::uniform_int_distribution<int> value(-10, 10);
  std::uniform_int_distribution<std::size_t> width(1, max_choices);
  std::vector<Issue> out;
  for (std::size_t a = 0; a < issues; ++a) {
    Issue issue;
    issue.name = "i" + std::to_string(a);
    const std::size_t c = width(rng);
    for (std::size_t k = 0; k < c; ++k) issue.choices.push_back("c" + std::to_string(k));
    issue.values.assign(agents, std::vector<Value>(c));
    for (auto& row : issue.values) {
      for (auto& v : row) v = value(rng);
    }
    out.push_back(std::move(issue));
  }
  return PdmInstance(agents, std::move(out));
}

// GFS1 straight from the definition over choice sets.
bool naive_gfs1(const PdmInstance& pdm, const PdmOutcome& outcome) {
  const auto n = static_cast<std::int64_t>(pdm.agents());
  for (AgentId i = 0; i < pdm.agents(); ++i) {
    Value spread;
    Value floor;
    Value value;
    for (std::size_t a = 0; a < pdm.issue_count(); ++a) {
      const auto& row = pdm.issues()[a].values[i];
      const Value hi = *std::max_element(row.begin(), row.end());
      const Value lo = *std::min_element(row.begin(), row.end());
      spread += hi - lo;
      floor += lo;
      value += row[outcome.choices[a]];
    }
    const Value target = spread / Value(n) + floor;
    bool ok = pdm.issue_count() == 0 && value >= target;
    for (std::size_t a = 0; a < pdm.issue_count() && !ok; ++a) {
      const auto& row = pdm.issues()[a].values[i];
      ok = value - row[outcome.choices[a]] + *std::max_element(row.begin(), row.end()) >= target;
    }
    if (!ok) return false;
  }
  return true;
}

TEST(MaxMinRoundRobinTest, BetaAndShares) {
  const PdmInstance pdm(2, {Issue{"x", {"p", "q", "r"}, {{1, 5, -2}, {0, 0, 0}}},
                            Issue{"y", {"s"}, {{3}, {4}}}});
  const auto beta = maxmin_rr::beta_table(pdm);
  EXPECT_EQ(beta.beta[0][0], Value(7));
  EXPECT_EQ(beta.beta[0][1], Value(0));
  EXPECT_EQ(beta.beta[1][0], Value(0));
  const auto s = maxmin_rr::pdm_shares(pdm);
  EXPECT_EQ(s.gfs[0], Value(7, 2));
  EXPECT_EQ(s.min_floor[0], Value(1));
  EXPECT_EQ(s.min_floor[1], Value(4));
}

TEST(MaxMinRoundRobinTest, PicksFollowBetaWithLowestIndexTies) {
  const PdmInstance pdm(2, {Issue{"x", {"p", "q"}, {{0, 1}, {1, 0}}},
                            Issue{"y", {"p", "q"}, {{0, 3}, {0, 0}}},
                            Issue{"z", {"p", "q"}, {{2, 2}, {5, 0}}}});
  const auto r = maxmin_rr::max_min_round_robin_traced(pdm);
  ASSERT_EQ(r.picks.size(), 3u);
  EXPECT_EQ(r.picks[0].agent, 0u);
  EXPECT_EQ(r.picks[0].issue, 1u);  // beta 3
  EXPECT_EQ(r.picks[0].choice, 1u);
  EXPECT_EQ(r.picks[1].agent, 1u);
  EXPECT_EQ(r.picks[1].issue, 2u);  // beta 5
  EXPECT_EQ(r.picks[1].choice, 0u);
  EXPECT_EQ(r.picks[2].agent, 0u);
  EXPECT_EQ(r.picks[2].issue, 0u);
  EXPECT_EQ(r.outcome.choices, (std::vector<std::size_t>{1, 1, 0}));
}

TEST(MaxMinRoundRobinTest, OrderIsValidated) {
  const PdmInstance pdm(3, {Issue{"x", {"p"}, {{1}, {1}, {1}}}});
  EXPECT_THROW(maxmin_rr::max_min_round_robin(pdm, std::vector<AgentId>{}), std::invalid_argument);
  EXPECT_THROW(maxmin_rr::max_min_round_robin(pdm, std::vector<AgentId>{0, 1}), std::invalid_argument);
  EXPECT_THROW(maxmin_rr::max_min_round_robin(pdm, std::vector<AgentId>{0, 1, 3}), std::invalid_argument);
  EXPECT_THROW(maxmin_rr::max_min_round_robin(pdm, std::vector<AgentId>{0, 1, 1}), std::invalid_argument);
  const auto r = maxmin_rr::max_min_round_robin_traced(pdm, std::vector<AgentId>{2, 0, 1});
  EXPECT_EQ(r.picks[0].agent, 2u);
}

TEST(MaxMinRoundRobinTest, Gfs1OnRandomInstancesAndOrders) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const PdmInstance pdm = random_pdm(rng, n, rng() % 13, 4);
    std::vector<AgentId> order(n);
    std::iota(order.begin(), order.end(), AgentId{0});
    for (int k = 0; k < 4; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      const PdmOutcome out = maxmin_rr::max_min_round_robin(pdm, order);
      EXPECT_NO_THROW(validate_outcome(pdm, out));
      EXPECT_TRUE(naive_gfs1(pdm, out)) << trial;
      EXPECT_TRUE(maxmin_rr::gfs1_check_pdm(pdm, out).holds) << trial;
    }
  }
}

TEST(MaxMinRoundRobinTest, CheckerAgreesWithNaive) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const PdmInstance pdm = random_pdm(rng, n, rng() % 6, 3);
    PdmOutcome out;
    for (const auto& issue : pdm.issues()) out.choices.push_back(rng() % issue.choices.size());
    EXPECT_EQ(maxmin_rr::gfs1_check_pdm(pdm, out).holds, naive_gfs1(pdm, out)) << trial;
  }
}

TEST(MaxMinRoundRobinTest, AllocationEmbeddingIsGfs1) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GeneratorOptions o;
    o.agents = 2 + seed % 3;
    o.items = seed % 9;
    o.min_value = -10;
    o.max_value = 10;
    o.seed = seed;
    const Instance inst = random_instance(o);
    const Allocation a = to_allocation(maxmin_rr::max_min_round_robin(to_public_decision(inst)));
    EXPECT_TRUE(is_gfs1(inst, a).holds) << seed;
    EXPECT_TRUE(naive::gfs1(inst, a)) << seed;
  }
}

TEST(MaxMinRoundRobinTest, NoIssues) {
  const PdmInstance pdm(2, {});
  const auto out = maxmin_rr::max_min_round_robin(pdm);
  EXPECT_TRUE(out.choices.empty());
  EXPECT_TRUE(maxmin_rr::gfs1_check_pdm(pdm, out).holds);
}

}  // namespace
}  // namespace extfair
