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

#ifndef EXTFAIR_MAXMIN_RR_HPP
#define EXTFAIR_MAXMIN_RR_HPP

#include <optional>
#include <vector>

#include "extfair/fairness.hpp"
#include "extfair/model.hpp"

namespace extfair::maxmin_rr {

/// beta[i][a] = max - min of agent i's values over the choices of issue a.
struct BetaTable {
  std::vector<std::vector<Value>> beta;
};

BetaTable beta_table(const PdmInstance& pdm);

/// One entry per turn: which agent picked which issue and choice.
struct Pick {
  AgentId agent = 0;
  std::size_t issue = 0;
  std::size_t choice = 0;
};

struct RoundRobinResult {
  PdmOutcome outcome;
  std::vector<Pick> picks;
};

/// Round robin over `order` (default 0..n-1). On its turn an agent takes
/// the undecided issue with the largest beta (lowest index on ties) and
/// fixes it to a choice it values most (lowest index on ties).
///
/// Throws std::invalid_argument if `order` is empty, names an agent out of
/// range, or leaves an agent out.
RoundRobinResult max_min_round_robin_traced(const PdmInstance& pdm,
                                            std::optional<std::vector<AgentId>> order = std::nullopt);

PdmOutcome max_min_round_robin(const PdmInstance& pdm,
                               std::optional<std::vector<AgentId>> order = std::nullopt);

/// Per agent i: GFS_i = (1/n) * sum_a beta_i(a), floor_i = sum_a min_i(a).
struct PdmShares {
  std::vector<Value> gfs;
  std::vector<Value> min_floor;
};

PdmShares pdm_shares(const PdmInstance& pdm);

/// GFS1 over choice sets: for every agent some issue, switched to the
/// agent's best choice, lifts its value to GFS_i + floor_i. Agents already
/// at that level are certified without an issue only when there are no
/// issues at all.
Verdict gfs1_check_pdm(const PdmInstance& pdm, const PdmOutcome& outcome);

}  // namespace extfair::maxmin_rr

#endif  // EXTFAIR_MAXMIN_RR_HPP
