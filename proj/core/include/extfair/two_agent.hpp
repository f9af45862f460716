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

#ifndef EXTFAIR_TWO_AGENT_HPP
#define EXTFAIR_TWO_AGENT_HPP

#include <vector>

#include "extfair/model.hpp"

namespace extfair::two_agent {

/// Agent 1's gain from owning an item rather than agent 2 owning it.
struct DeltaEntry {
  ItemId item = 0;
  Value delta;      // value(0, a, 0) - value(0, a, 1)
  Value abs_delta;  // |delta|
};

std::vector<DeltaEntry> deltas(const Instance& inst);

/// value(0, a, 0) == value(1, a, 1) and value(0, a, 1) == value(1, a, 0)
/// for every item.
bool is_symmetric(const Instance& inst);

/// Greedy EFX construction for two agents with symmetric valuations.
///
/// Items are placed in non-increasing |delta| (stable on input order). Each
/// item goes where the agent with the smaller value over the items placed
/// so far weakly prefers it; agent 1 decides on equal values and keeps the
/// item when indifferent.
///
/// Throws UnsupportedInstance unless n == 2 and the valuations are
/// symmetric.
Allocation symmetric_efx(const Instance& inst);

/// Same placement rule without sorting: items in input order. EF1, O(m).
Allocation symmetric_ef1(const Instance& inst);

/// Symmetric instance made of agent 1 and a copy of agent 1 standing in for
/// agent 2: row 1 is agent 1's row, row 2 is the same row with owners
/// swapped.
Instance clone_first_agent(const Instance& inst);

/// EFX for any two-agent instance: split the items with symmetric_efx on
/// the clone instance, then agent 2 picks the bundle it values more (ties
/// go to the first bundle) and agent 1 gets the other.
Allocation two_agent_efx(const Instance& inst);

/// EF1 in linear time: as two_agent_efx with symmetric_ef1 as the splitter.
Allocation two_agent_ef1(const Instance& inst);

}  // namespace extfair::two_agent

#endif  // EXTFAIR_TWO_AGENT_HPP
