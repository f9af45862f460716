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

#include "extfair/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "extfair/errors.hpp"
#include "extfair/known_instances.hpp"

namespace extfair::oracle {

std::optional<std::uint64_t> outcome_count(std::size_t agents, std::size_t items, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t a = 0; a < items; ++a) {
    if (agents != 0 && total > cap / agents) return std::nullopt;
    total *= agents;
  }
  if (total > cap) return std::nullopt;
  return total;
}

namespace {

void require_capacity(std::size_t agents, std::size_t items, std::uint64_t max_outcomes) {
  if (!outcome_count(agents, items, max_outcomes)) {
    throw CapacityError(std::to_string(agents) + "^" + std::to_string(items) +
                        " outcomes exceed the limit of " + std::to_string(max_outcomes));
  }
}

}  // namespace

void for_each_allocation(std::size_t agents, std::size_t items, std::uint64_t max_outcomes,
                         const std::function<bool(const Allocation&)>& visit) {
  require_capacity(agents, items, max_outcomes);
  std::vector<AgentId> owners(items, 0);
  while (true) {
    if (!visit(Allocation(owners))) return;
    // Odometer with the last item as the least significant digit.
    std::size_t pos = items;
    while (pos > 0) {
      --pos;
      if (++owners[pos] < agents) break;
      owners[pos] = 0;
      if (pos == 0) return;
    }
    if (items == 0) return;
  }
}

ExistenceResult exists_allocation(const Instance& inst,
                                  const std::function<bool(const Allocation&)>& predicate,
                                  std::uint64_t max_outcomes) {
  ExistenceResult result;
  for_each_allocation(inst.agents(), inst.item_count(), max_outcomes, [&](const Allocation& alloc) {
    ++result.total;
    if (predicate(alloc)) {
      if (!result.first) result.first = alloc;
      ++result.count;
    }
    return true;
  });
  return result;
}

ExistenceResult exists_allocation(const Instance& inst, const ConceptSpec& spec,
                                  std::uint64_t max_outcomes) {
  if (spec.kind == Concept::EMMS) {
    // Shares do not depend on the allocation; compute them once.
    const FairShareProfile profile = with_emms(inst, shares(inst), max_outcomes);
    return exists_allocation(
        inst,
        [&](const Allocation& alloc) {
          for (AgentId i = 0; i < inst.agents(); ++i) {
            if (total_value(inst, alloc, i) < *profile.agents[i].emms) return false;
          }
          return true;
        },
        max_outcomes);
  }
  return exists_allocation(
      inst, [&](const Allocation& alloc) { return evaluate(inst, alloc, spec, max_outcomes).holds; },
      max_outcomes);
}

PartitionIterator::PartitionIterator(std::size_t items, std::size_t blocks)
    : blocks_(blocks), labels_(items, 0), prefix_max_(items, 0) {
  if (blocks == 0 && items > 0) throw std::invalid_argument("cannot partition items into 0 blocks");
}

std::size_t PartitionIterator::used_blocks() const noexcept {
  return labels_.empty() ? 0 : prefix_max_.back() + 1;
}

bool PartitionIterator::next() {
  // Increment the rightmost position that can grow, reset everything after it.
  for (std::size_t pos = labels_.size(); pos-- > 1;) {
    const std::size_t limit = std::min(prefix_max_[pos - 1] + 1, blocks_ - 1);
    if (labels_[pos] < limit) {
      ++labels_[pos];
      prefix_max_[pos] = std::max(prefix_max_[pos - 1], labels_[pos]);
      for (std::size_t rest = pos + 1; rest < labels_.size(); ++rest) {
        labels_[rest] = 0;
        prefix_max_[rest] = prefix_max_[pos];
      }
      return true;
    }
  }
  return false;
}

Value worst_assignment_value(const Instance& inst, AgentId observer,
                             const std::vector<std::size_t>& labels) {
  const std::size_t n = inst.agents();
  // part_value[p][j]: observer's value when agent j owns part p.
  std::vector<std::vector<Value>> part_value(n, std::vector<Value>(n));
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (AgentId j = 0; j < n; ++j) part_value[labels[a]][j] += inst.value(observer, a, j);
  }
  std::vector<AgentId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<Value> worst;
  do {
    Value v;
    for (std::size_t p = 0; p < n; ++p) v += part_value[p][perm[p]];
    if (!worst || v < *worst) worst = v;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *worst;
}

Value emms_exact(const Instance& inst, AgentId agent, std::uint64_t max_outcomes) {
  require_capacity(inst.agents(), inst.item_count(), max_outcomes);
  PartitionIterator it(inst.item_count(), inst.agents());
  Value best = worst_assignment_value(inst, agent, it.labels());
  while (it.next()) best = std::max(best, worst_assignment_value(inst, agent, it.labels()));
  return best;
}

// ---------------------------------------------------------------------------

namespace {

bool nonneg_floor(const Instance& inst) {
  for (const AgentShares& s : shares(inst).agents) {
    if (s.min_floor.sign() < 0) return false;
  }
  return true;
}

ConceptSpec bind(ConceptSpec spec, const Instance& inst) {
  if (spec.kind == Concept::KPProp && spec.k == 0) spec.k = inst.agents();
  return spec;
}

}  // namespace

AuditResult audit_implication(const LatticeEdge& edge, std::uint64_t trials, std::uint64_t seed) {
  AuditResult result;
  result.edge = edge.name;
  const SamplerOptions& s = edge.sampler;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> agent_dist(s.min_agents, s.max_agents);
  std::uniform_int_distribution<std::size_t> item_dist(s.min_items, s.max_items);
  std::bernoulli_distribution conditioned(s.conditioned_fraction);

  for (std::uint64_t t = 0; t < trials; ++t) {
    GeneratorOptions gen;
    gen.agents = agent_dist(rng);
    gen.items = item_dist(rng);
    gen.min_value = s.min_value;
    gen.max_value = s.max_value;
    gen.seed = rng();
    const Instance inst = random_instance(gen);
    ++result.trials;
    if (edge.require_nonneg_floor && !nonneg_floor(inst)) {
      ++result.filtered;
      continue;
    }
    const ConceptSpec premise = bind(edge.premise, inst);
    const ConceptSpec conclusion = bind(edge.conclusion, inst);

    const std::uint64_t total = *outcome_count(inst.agents(), inst.item_count(), kDefaultMaxOutcomes);
    std::uint64_t start = std::uniform_int_distribution<std::uint64_t>(0, total - 1)(rng);
    const bool scan = conditioned(rng);

    std::vector<AgentId> owners(inst.item_count());
    auto decode = [&](std::uint64_t index) {
      for (std::size_t a = owners.size(); a-- > 0;) {
        owners[a] = index % inst.agents();
        index /= inst.agents();
      }
      return Allocation(owners);
    };

    Allocation alloc = decode(start);
    bool premise_holds = evaluate(inst, alloc, premise).holds;
    for (std::uint64_t step = 1; scan && !premise_holds && step < total; ++step) {
      alloc = decode((start + step) % total);
      premise_holds = evaluate(inst, alloc, premise).holds;
    }
    if (!premise_holds) continue;
    ++result.premise_held;

    bool conclusion_holds = false;
    try {
      conclusion_holds = evaluate(inst, alloc, conclusion).holds;
    } catch (const CapacityError& e) {
      result.skipped = e.what();
      return result;
    }
    if (!conclusion_holds) {
      ++result.counterexamples;
      if (!result.first_counterexample) result.first_counterexample = Counterexample{inst, alloc};
    }
  }
  return result;
}

std::vector<LatticeEdge> lattice_edges() {
  const SamplerOptions general;
  SamplerOptions two_agents = general;
  two_agents.min_agents = two_agents.max_agents = 2;
  SamplerOptions nonneg = general;
  nonneg.min_value = 0;

  return {
      {"EF => EFX", {Concept::EF, 0}, {Concept::EFX, 0}, general, false},
      {"EFX => EF1", {Concept::EFX, 0}, {Concept::EF1, 1}, general, false},
      {"EF1 => EF2", {Concept::EF1, 1}, {Concept::EFk, 2}, general, false},
      {"EF2 => EF3", {Concept::EFk, 2}, {Concept::EFk, 3}, general, false},
      {"EF => 2-P-PROP", {Concept::EF, 0}, {Concept::KPProp, 2}, general, false},
      {"n-P-PROP => 2-P-PROP", {Concept::KPProp, 0}, {Concept::KPProp, 2}, general, false},
      {"n-P-PROP => PROP-Ave", {Concept::KPProp, 0}, {Concept::PropAve, 0}, general, false},
      {"PROP-Ave => GFS", {Concept::PropAve, 0}, {Concept::GFS, 0}, general, false},
      {"PROP-Ave => EMMS", {Concept::PropAve, 0}, {Concept::EMMS, 0}, general, false},
      {"GFS => GFS1", {Concept::GFS, 0}, {Concept::GFS1, 0}, general, false},
      {"GFS => PROP-Max (nonnegative floor)", {Concept::GFS, 0}, {Concept::PropMax, 0}, nonneg, true},
      {"EF => PROP-Ave (two agents)", {Concept::EF, 0}, {Concept::PropAve, 0}, two_agents, false},
  };
}

std::vector<NonEdgeResult> confirm_non_edges() {
  auto confirm = [](const std::string& name, const Instance& inst, const Allocation& alloc,
                    Concept premise, Concept conclusion) {
    const ConceptSpec p{premise, 0};
    const ConceptSpec c{conclusion, 0};
    return NonEdgeResult{name, concept_name(p), concept_name(c),
                         evaluate(inst, alloc, p).holds && !evaluate(inst, alloc, c).holds};
  };
  return {
      confirm("negative items, two agents", known::negative_items_instance(),
              known::negative_items_split(), Concept::EF, Concept::PropMax),
      confirm("single item externality, three agents", known::single_item_externality_instance(),
              known::single_item_to_agent3(), Concept::EF, Concept::PropMax),
      confirm("single item externality, three agents", known::single_item_externality_instance(),
              known::single_item_to_agent3(), Concept::EF, Concept::PropAve),
  };
}

bool LatticeAudit::passed() const {
  const bool edges_ok = std::all_of(edges.begin(), edges.end(), [](const AuditResult& r) {
    return r.counterexamples == 0;
  });
  const bool non_edges_ok = std::all_of(non_edges.begin(), non_edges.end(),
                                        [](const NonEdgeResult& r) { return r.confirmed; });
  return edges_ok && non_edges_ok;
}

LatticeAudit run_lattice_audit(std::uint64_t trials, std::uint64_t seed) {
  LatticeAudit audit;
  std::uint64_t edge_seed = seed;
  for (const LatticeEdge& edge : lattice_edges()) {
    audit.edges.push_back(audit_implication(edge, trials, edge_seed++));
  }
  audit.non_edges = confirm_non_edges();
  return audit;
}

}  // namespace extfair::oracle
