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

#ifndef EXTFAIR_KNOWN_INSTANCES_HPP
#define EXTFAIR_KNOWN_INSTANCES_HPP

#include "extfair/model.hpp"

/// Small hand-made instances with known fairness behaviour, used by the
/// audit and the tests. The same data ships as JSON under fixtures/.
namespace extfair::known {

/// Two agents, items a, b, c.
///   agent 1: a (3,1)  b (1,2)  c (2,1)
///   agent 2: a (1,4)  b (2,1)  c (3,2)
/// where (x, y) is the value when the item goes to agent 1 / agent 2.
Instance swap_envy_instance();
/// {1: {a, b}, 2: {c}}
Allocation swap_envy_allocation();
/// {1: {b, c}, 2: {a}}: EF1 but not EFX.
Allocation ef1_not_efx_allocation();

/// Three agents, six identical items a1..a6 and one item g; no allocation
/// is EFX.
Instance no_efx_instance();

/// Two agents, two items, no externalities; agent 1 values owning either
/// item at -1, agent 2 values everything at 0.
Instance negative_items_instance();
/// Each agent gets one item: EF but not PROP-Max for agent 1.
Allocation negative_items_split();

/// Three agents, one item; all values 0 except agent 1 gets 1 when agent 2
/// owns the item.
Instance single_item_externality_instance();
/// Agent 3 owns the item: EF but neither PROP-Max nor PROP-Ave.
Allocation single_item_to_agent3();

}  // namespace extfair::known

#endif  // EXTFAIR_KNOWN_INSTANCES_HPP
