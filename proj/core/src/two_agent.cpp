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

#include "extfair/two_agent.hpp"

#include <algorithm>
#include <numeric>

#include "extfair/errors.hpp"

namespace extfair::two_agent {

namespace {

void require_two_agents(const Instance& inst) {
  if (inst.agents() != 2) {
    throw UnsupportedInstance("two-agent algorithm needs exactly 2 agents, instance has " +
                              std::to_string(inst.agents()));
  }
}

/// Placement rule shared by the EFX and EF1 splitters. `val(observer, item,
/// owner)` must describe a symmetric two-agent valuation.
template <typename Valuation>
std::vector<AgentId> split(std::size_t items, const std::vector<ItemId>& order, const Valuation& val) {
  std::vector<AgentId> owners(items, 0);
  Value first;
  Value second;
  for (ItemId a : order) {
    const AgentId decider = first <= second ? 0 : 1;
    const AgentId other = 1 - decider;
    const AgentId owner = val(decider, a, decider) >= val(decider, a, other) ? decider : other;
    owners[a] = owner;
    first += val(0, a, owner);
    second += val(1, a, owner);
  }
  return owners;
}

std::vector<ItemId> by_abs_delta(const std::vector<DeltaEntry>& entries) {
  std::vector<ItemId> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](ItemId l, ItemId r) {
    return entries[l].abs_delta > entries[r].abs_delta;
  });
  return order;
}

std::vector<ItemId> input_order(std::size_t items) {
  std::vector<ItemId> order(items);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

/// Agent 1 and its copy: the copy owning an item looks to agent 1 like
/// agent 2 owning it.
auto clone_valuation(const Instance& inst) {
  return [&inst](AgentId observer, ItemId a, AgentId owner) -> const Value& {
    return inst.value(0, a, observer == 0 ? owner : 1 - owner);
  };
}

/// Agent 2 takes the split bundle it values more; agent 1 gets the rest.
Allocation cut_and_choose(const Instance& inst, const std::vector<AgentId>& split_owners) {
  // Value to agent 2 when it takes bundle 0 versus bundle 1.
  Value take_first;
  Value take_second;
  for (std::size_t a = 0; a < split_owners.size(); ++a) {
    const bool in_first = split_owners[a] == 0;
    take_first += inst.value(1, a, in_first ? 1 : 0);
    take_second += inst.value(1, a, in_first ? 0 : 1);
  }
  const AgentId first_bundle_owner = take_first >= take_second ? 1 : 0;
  std::vector<AgentId> owners(split_owners.size());
  for (std::size_t a = 0; a < owners.size(); ++a) {
    owners[a] = split_owners[a] == 0 ? first_bundle_owner : 1 - first_bundle_owner;
  }
  return Allocation(std::move(owners));
}

}  // namespace

std::vector<DeltaEntry> deltas(const Instance& inst) {
  require_two_agents(inst);
  std::vector<DeltaEntry> out;
  out.reserve(inst.item_count());
  for (std::size_t a = 0; a < inst.item_count(); ++a) {
    Value d = inst.value(0, a, 0) - inst.value(0, a, 1);
    Value magnitude = abs(d);
    out.push_back(DeltaEntry{a, std::move(d), std::move(magnitude)});
  }
  return out;
}

bool is_symmetric(const Instance& inst) {
  if (inst.agents() != 2) return false;
  for (std::size_t a = 0; a < inst.item_count(); ++a) {
    if (inst.value(0, a, 0) != inst.value(1, a, 1) || inst.value(0, a, 1) != inst.value(1, a, 0)) {
      return false;
    }
  }
  return true;
}

Allocation symmetric_efx(const Instance& inst) {
  require_two_agents(inst);
  if (!is_symmetric(inst)) throw UnsupportedInstance("symmetric_efx: valuations are not symmetric");
  auto val = [&inst](AgentId i, ItemId a, AgentId j) -> const Value& { return inst.value(i, a, j); };
  return Allocation(split(inst.item_count(), by_abs_delta(deltas(inst)), val));
}

Allocation symmetric_ef1(const Instance& inst) {
  require_two_agents(inst);
  if (!is_symmetric(inst)) throw UnsupportedInstance("symmetric_ef1: valuations are not symmetric");
  auto val = [&inst](AgentId i, ItemId a, AgentId j) -> const Value& { return inst.value(i, a, j); };
  return Allocation(split(inst.item_count(), input_order(inst.item_count()), val));
}

Instance clone_first_agent(const Instance& inst) {
  require_two_agents(inst);
  const std::size_t m = inst.item_count();
  std::vector<Value> flat(4 * m);
  for (std::size_t a = 0; a < m; ++a) {
    flat[(0 * m + a) * 2 + 0] = inst.value(0, a, 0);
    flat[(0 * m + a) * 2 + 1] = inst.value(0, a, 1);
    flat[(1 * m + a) * 2 + 0] = inst.value(0, a, 1);
    flat[(1 * m + a) * 2 + 1] = inst.value(0, a, 0);
  }
  return Instance(2, inst.items(), std::move(flat));
}

Allocation two_agent_efx(const Instance& inst) {
  require_two_agents(inst);
  // The clone instance has the same deltas as agent 1.
  const auto order = by_abs_delta(deltas(inst));
  return cut_and_choose(inst, split(inst.item_count(), order, clone_valuation(inst)));
}

Allocation two_agent_ef1(const Instance& inst) {
  require_two_agents(inst);
  return cut_and_choose(inst,
                        split(inst.item_count(), input_order(inst.item_count()), clone_valuation(inst)));
}

}  // namespace extfair::two_agent
