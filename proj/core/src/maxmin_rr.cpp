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

#include "extfair/maxmin_rr.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace extfair::maxmin_rr {

BetaTable beta_table(const PdmInstance& pdm) {
  BetaTable table;
  table.beta.assign(pdm.agents(), std::vector<Value>(pdm.issue_count()));
  for (AgentId i = 0; i < pdm.agents(); ++i) {
    for (std::size_t a = 0; a < pdm.issue_count(); ++a) {
      table.beta[i][a] = pdm.max_value(i, a) - pdm.min_value(i, a);
    }
  }
  return table;
}

RoundRobinResult max_min_round_robin_traced(const PdmInstance& pdm,
                                            std::optional<std::vector<AgentId>> order) {
  const std::size_t n = pdm.agents();
  std::vector<AgentId> turns;
  if (order) {
    turns = std::move(*order);
    std::vector<AgentId> sorted = turns;
    std::sort(sorted.begin(), sorted.end());
    std::vector<AgentId> expected(n);
    std::iota(expected.begin(), expected.end(), 0);
    if (sorted != expected) {
      throw std::invalid_argument("round robin order must list every agent exactly once");
    }
  } else {
    turns.resize(n);
    std::iota(turns.begin(), turns.end(), 0);
  }

  const BetaTable table = beta_table(pdm);
  const std::size_t m = pdm.issue_count();
  std::vector<bool> decided(m, false);
  RoundRobinResult result;
  result.outcome.choices.assign(m, 0);

  for (std::size_t turn = 0; turn < m; ++turn) {
    const AgentId agent = turns[turn % n];
    std::optional<std::size_t> issue;
    for (std::size_t a = 0; a < m; ++a) {
      if (decided[a]) continue;
      if (!issue || table.beta[agent][a] > table.beta[agent][*issue]) issue = a;
    }
    const auto& row = pdm.issues()[*issue].values[agent];
    const auto choice = static_cast<std::size_t>(std::max_element(row.begin(), row.end()) - row.begin());
    decided[*issue] = true;
    result.outcome.choices[*issue] = choice;
    result.picks.push_back(Pick{agent, *issue, choice});
  }
  return result;
}

PdmOutcome max_min_round_robin(const PdmInstance& pdm, std::optional<std::vector<AgentId>> order) {
  return max_min_round_robin_traced(pdm, std::move(order)).outcome;
}

PdmShares pdm_shares(const PdmInstance& pdm) {
  const Value n(static_cast<std::int64_t>(pdm.agents()));
  PdmShares shares;
  for (AgentId i = 0; i < pdm.agents(); ++i) {
    Value spread;
    Value floor;
    for (std::size_t a = 0; a < pdm.issue_count(); ++a) {
      const Value lo = pdm.min_value(i, a);
      spread += pdm.max_value(i, a) - lo;
      floor += lo;
    }
    shares.gfs.push_back(spread / n);
    shares.min_floor.push_back(floor);
  }
  return shares;
}

Verdict gfs1_check_pdm(const PdmInstance& pdm, const PdmOutcome& outcome) {
  validate_outcome(pdm, outcome);
  const PdmShares shares = pdm_shares(pdm);
  Verdict verdict;
  for (AgentId i = 0; i < pdm.agents(); ++i) {
    const Value value = total_value(pdm, outcome, i);
    const Value threshold = shares.gfs[i] + shares.min_floor[i];
    std::optional<std::size_t> best;
    Value best_gain;
    for (std::size_t a = 0; a < pdm.issue_count(); ++a) {
      Value g = pdm.max_value(i, a) - pdm.issues()[a].values[i][outcome.choices[a]];
      if (!best || g > best_gain) {
        best = a;
        best_gain = std::move(g);
      }
    }
    if (value + best_gain < threshold) {
      verdict.holds = false;
      verdict.violation = Witness{i, std::nullopt, {}, {}};
      verdict.certificates.clear();
      return verdict;
    }
    Witness certificate{i, std::nullopt, {}, {}};
    if (best) certificate.items.push_back(*best);
    verdict.certificates.push_back(std::move(certificate));
  }
  return verdict;
}

}  // namespace extfair::maxmin_rr
