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

#include <benchmark/benchmark.h>

#include <numeric>

#include "extfair/fairness.hpp"
#include "extfair/known_instances.hpp"
#include "extfair/maxmin_rr.hpp"
#include "extfair/oracle.hpp"
#include "extfair/three_binary.hpp"
#include "extfair/two_agent.hpp"

namespace {

using namespace extfair;

Instance make(std::size_t agents, std::size_t items, bool binary) {
  GeneratorOptions o;
  o.agents = agents;
  o.items = items;
  o.min_value = -10;
  o.max_value = 10;
  o.binary = binary;
  o.no_chore = binary;
  return random_instance(o);
}

void BM_TwoAgentEf1(benchmark::State& state) {
  const Instance inst = make(2, static_cast<std::size_t>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(two_agent::two_agent_ef1(inst));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TwoAgentEf1)->RangeMultiplier(10)->Range(1000, 1'000'000)->Unit(benchmark::kMillisecond);

void BM_TwoAgentEfx(benchmark::State& state) {
  const Instance inst = make(2, static_cast<std::size_t>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(two_agent::two_agent_efx(inst));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TwoAgentEfx)->RangeMultiplier(10)->Range(1000, 1'000'000)->Unit(benchmark::kMillisecond);

void BM_CheckEf1(benchmark::State& state) {
  const Instance inst = make(3, static_cast<std::size_t>(state.range(0)), false);
  std::vector<AgentId> owners(inst.item_count());
  for (std::size_t a = 0; a < owners.size(); ++a) owners[a] = a % 3;
  const Allocation alloc(owners);
  for (auto _ : state) benchmark::DoNotOptimize(is_ef_k(inst, alloc, 1));
}
BENCHMARK(BM_CheckEf1)->RangeMultiplier(10)->Range(1000, 100'000)->Unit(benchmark::kMillisecond);

void BM_ThreeBinary(benchmark::State& state) {
  const Instance inst = make(3, static_cast<std::size_t>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(three_binary::solve_three_binary(inst));
}
BENCHMARK(BM_ThreeBinary)->Arg(30)->Arg(300)->Arg(3000);

void BM_KernelConfigurations(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(three_binary::kernel_configurations(2));
}
BENCHMARK(BM_KernelConfigurations)->Unit(benchmark::kMillisecond);

void BM_MaxMinRoundRobin(benchmark::State& state) {
  const PdmInstance pdm = to_public_decision(make(5, static_cast<std::size_t>(state.range(0)), false));
  for (auto _ : state) benchmark::DoNotOptimize(maxmin_rr::max_min_round_robin(pdm));
}
BENCHMARK(BM_MaxMinRoundRobin)->Arg(20)->Arg(200)->Arg(2000);

void BM_EnumerateNoEfx(benchmark::State& state) {
  const Instance inst = known::no_efx_instance();
  for (auto _ : state) benchmark::DoNotOptimize(oracle::exists_allocation(inst, ConceptSpec{Concept::EFX, 0}));
}
BENCHMARK(BM_EnumerateNoEfx)->Unit(benchmark::kMillisecond);

void BM_EmmsExact(benchmark::State& state) {
  const Instance inst = make(3, static_cast<std::size_t>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::emms_exact(inst, 0));
}
BENCHMARK(BM_EmmsExact)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
