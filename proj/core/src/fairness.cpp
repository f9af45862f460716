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

#include "extfair/fairness.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "extfair/errors.hpp"
#include "extfair/oracle.hpp"

namespace extfair {

namespace {

void require_distinct(AgentId i, AgentId j) {
  if (i == j) throw std::invalid_argument("envy is defined for two distinct agents");
}

/// V_i(pi) - V_i(pi^{i<->j}). Items outside the bundles of i and j
/// contribute the same to both sides and are skipped.
Value pair_margin(const Instance& inst, const Allocation& alloc, AgentId i, AgentId j) {
  Value margin;
  for (std::size_t a = 0; a < alloc.size(); ++a) {
    const AgentId owner = alloc.owner(a);
    if (owner == i) {
      margin += inst.value(i, a, i) - inst.value(i, a, j);
    } else if (owner == j) {
      margin += inst.value(i, a, j) - inst.value(i, a, i);
    }
  }
  return margin;
}

/// Change of pair_margin(i, j) when item a is deleted from the allocation.
Value removal_gain(const Instance& inst, const Allocation& alloc, AgentId i, AgentId j, ItemId a) {
  const AgentId owner = alloc.owner(a);
  if (owner == i) return inst.value(i, a, j) - inst.value(i, a, i);
  if (owner == j) return inst.value(i, a, i) - inst.value(i, a, j);
  return Value(0);
}

/// Margin recomputed from the definition with `removed` deleted from every
/// bundle. Used to re-check witnesses independently of the gain shortcut.
Value margin_without(const Instance& inst, const Allocation& alloc, AgentId i, AgentId j,
                     const std::vector<ItemId>& removed) {
  const Allocation swapped = swap(alloc, i, j);
  Value kept;
  Value swapped_value;
  for (std::size_t a = 0; a < alloc.size(); ++a) {
    if (std::find(removed.begin(), removed.end(), a) != removed.end()) continue;
    kept += inst.value(i, a, alloc.owner(a));
    swapped_value += inst.value(i, a, swapped.owner(a));
  }
  return kept - swapped_value;
}

Value gfs_threshold(const AgentShares& s) { return s.gfs + s.min_floor; }

Verdict per_agent_threshold(const Instance& inst, const Allocation& alloc,
                            Value AgentShares::*share) {
  const FairShareProfile profile = shares(inst);
  Verdict verdict;
  for (AgentId i = 0; i < inst.agents(); ++i) {
    if (total_value(inst, alloc, i) < profile.agents[i].*share) {
      verdict.holds = false;
      verdict.violation = Witness{i, std::nullopt, {}, {}};
      break;
    }
  }
  return verdict;
}

std::string lower(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return text;
}

}  // namespace

Value envy_amount(const Instance& inst, const Allocation& alloc, AgentId i, AgentId j) {
  require_distinct(i, j);
  return -pair_margin(inst, alloc, i, j);
}

Verdict is_ef(const Instance& inst, const Allocation& alloc) { return is_ef_k(inst, alloc, 0); }

Verdict is_ef_k(const Instance& inst, const Allocation& alloc, std::size_t k) {
  Verdict verdict;
  std::vector<std::pair<Value, ItemId>> gains;
  for (AgentId i = 0; i < inst.agents(); ++i) {
    for (AgentId j = 0; j < inst.agents(); ++j) {
      if (i == j) continue;
      const Value margin = pair_margin(inst, alloc, i, j);
      if (margin.sign() >= 0) continue;

      // Deletions act independently on the margin, so the best set of at
      // most k items is the k largest positive gains.
      gains.clear();
      for (std::size_t a = 0; a < alloc.size(); ++a) {
        const AgentId owner = alloc.owner(a);
        if (owner != i && owner != j) continue;
        Value g = removal_gain(inst, alloc, i, j, a);
        if (g.sign() > 0) gains.emplace_back(std::move(g), a);
      }
      const std::size_t take = std::min(k, gains.size());
      std::partial_sort(gains.begin(), gains.begin() + static_cast<std::ptrdiff_t>(take), gains.end(),
                        [](const auto& l, const auto& r) {
                          return l.first != r.first ? l.first > r.first : l.second < r.second;
                        });
      Value reduced = margin;
      Witness witness{i, j, {}, {}};
      for (std::size_t t = 0; t < take && reduced.sign() < 0; ++t) {
        reduced += gains[t].first;
        witness.items.push_back(gains[t].second);
      }
      if (reduced.sign() < 0) {
        verdict.holds = false;
        verdict.violation = std::move(witness);
        verdict.certificates.clear();
        return verdict;
      }
      verdict.certificates.push_back(std::move(witness));
    }
  }
  return verdict;
}

Verdict is_efx(const Instance& inst, const Allocation& alloc) {
  Verdict verdict;
  for (AgentId i = 0; i < inst.agents(); ++i) {
    for (AgentId j = 0; j < inst.agents(); ++j) {
      if (i == j) continue;
      const Value margin = pair_margin(inst, alloc, i, j);
      if (margin.sign() >= 0) continue;
      for (std::size_t a = 0; a < alloc.size(); ++a) {
        const Value g = removal_gain(inst, alloc, i, j, a);
        if (g.sign() > 0 && (margin + g).sign() < 0) {
          verdict.holds = false;
          verdict.violation = Witness{i, j, {a}, {}};
          return verdict;
        }
      }
    }
  }
  return verdict;
}

FairShareProfile shares(const Instance& inst) {
  const Value n(static_cast<std::int64_t>(inst.agents()));
  FairShareProfile profile;
  profile.agents.reserve(inst.agents());
  for (AgentId i = 0; i < inst.agents(); ++i) {
    Value max_sum;
    Value min_sum;
    Value all_sum;
    for (std::size_t a = 0; a < inst.item_count(); ++a) {
      max_sum += inst.max_value(i, a);
      min_sum += inst.min_value(i, a);
      for (AgentId j = 0; j < inst.agents(); ++j) all_sum += inst.value(i, a, j);
    }
    profile.agents.push_back(AgentShares{(max_sum - min_sum) / n, max_sum / n, all_sum / n, min_sum,
                                         std::nullopt});
  }
  return profile;
}

FairShareProfile with_emms(const Instance& inst, FairShareProfile profile,
                           std::uint64_t max_outcomes) {
  for (AgentId i = 0; i < inst.agents(); ++i) {
    profile.agents[i].emms = oracle::emms_exact(inst, i, max_outcomes);
  }
  return profile;
}

Verdict is_gfs(const Instance& inst, const Allocation& alloc) {
  const FairShareProfile profile = shares(inst);
  Verdict verdict;
  for (AgentId i = 0; i < inst.agents(); ++i) {
    if (total_value(inst, alloc, i) < gfs_threshold(profile.agents[i])) {
      verdict.holds = false;
      verdict.violation = Witness{i, std::nullopt, {}, {}};
      break;
    }
  }
  return verdict;
}

Verdict is_gfs1(const Instance& inst, const Allocation& alloc) {
  const FairShareProfile profile = shares(inst);
  Verdict verdict;
  for (AgentId i = 0; i < inst.agents(); ++i) {
    const Value value = total_value(inst, alloc, i);
    const Value threshold = gfs_threshold(profile.agents[i]);
    std::optional<ItemId> best;
    Value best_gain;
    for (std::size_t a = 0; a < alloc.size(); ++a) {
      Value g = inst.max_value(i, a) - inst.value(i, a, alloc.owner(a));
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

Verdict is_prop_max(const Instance& inst, const Allocation& alloc) {
  return per_agent_threshold(inst, alloc, &AgentShares::prop_max);
}

Verdict is_prop_ave(const Instance& inst, const Allocation& alloc) {
  return per_agent_threshold(inst, alloc, &AgentShares::prop_ave);
}

Verdict is_k_p_prop(const Instance& inst, const Allocation& alloc, std::size_t k) {
  const std::size_t n = inst.agents();
  if (k < 1 || k > n) {
    throw std::invalid_argument("k-P-PROP needs 1 <= k <= n, got k = " + std::to_string(k));
  }
  if (n > 20) throw CapacityError("k-P-PROP group enumeration is limited to 20 agents");

  Verdict verdict;
  for (AgentId i = 0; i < n; ++i) {
    for (std::uint32_t group = 1; group < (1u << n); ++group) {
      if (!(group & (1u << i))) continue;
      const auto size = static_cast<std::size_t>(__builtin_popcount(group));
      if (size > k) continue;
      // Both sides only see the items the group holds. Compare
      // |G| * held against the group sum to stay in integers.
      Value value;
      Value group_sum;
      for (std::size_t a = 0; a < alloc.size(); ++a) {
        if (!(group & (1u << alloc.owner(a)))) continue;
        value += inst.value(i, a, alloc.owner(a));
        for (AgentId j = 0; j < n; ++j) {
          if (group & (1u << j)) group_sum += inst.value(i, a, j);
        }
      }
      if (value * Value(static_cast<std::int64_t>(size)) < group_sum) {
        Witness witness{i, std::nullopt, {}, {}};
        for (AgentId j = 0; j < n; ++j) {
          if (group & (1u << j)) witness.group.push_back(j);
        }
        verdict.holds = false;
        verdict.violation = std::move(witness);
        return verdict;
      }
    }
  }
  return verdict;
}

Verdict is_emms(const Instance& inst, const Allocation& alloc, std::uint64_t max_outcomes) {
  Verdict verdict;
  for (AgentId i = 0; i < inst.agents(); ++i) {
    if (total_value(inst, alloc, i) < oracle::emms_exact(inst, i, max_outcomes)) {
      verdict.holds = false;
      verdict.violation = Witness{i, std::nullopt, {}, {}};
      break;
    }
  }
  return verdict;
}

std::string concept_name(const ConceptSpec& spec) {
  switch (spec.kind) {
    case Concept::EF: return "EF";
    case Concept::EF1: return "EF1";
    case Concept::EFk: return "EF" + std::to_string(spec.k);
    case Concept::EFX: return "EFX";
    case Concept::GFS: return "GFS";
    case Concept::GFS1: return "GFS1";
    case Concept::PropMax: return "PROP-Max";
    case Concept::PropAve: return "PROP-Ave";
    case Concept::KPProp: return std::to_string(spec.k) + "-P-PROP";
    case Concept::EMMS: return "EMMS";
  }
  return "?";
}

ConceptSpec parse_concept(const std::string& id, std::size_t k) {
  const std::string key = lower(id);
  if (key == "ef") return {Concept::EF, 0};
  if (key == "ef1") return {Concept::EF1, 1};
  if (key == "efk") return {Concept::EFk, k};
  if (key == "efx") return {Concept::EFX, 0};
  if (key == "gfs") return {Concept::GFS, 0};
  if (key == "gfs1") return {Concept::GFS1, 0};
  if (key == "prop-max") return {Concept::PropMax, 0};
  if (key == "prop-ave") return {Concept::PropAve, 0};
  if (key == "kpprop" || key == "k-p-prop") return {Concept::KPProp, k};
  if (key == "emms") return {Concept::EMMS, 0};
  throw std::invalid_argument("unknown fairness concept '" + id + "'");
}

Verdict evaluate(const Instance& inst, const Allocation& alloc, const ConceptSpec& spec,
                 std::uint64_t max_outcomes) {
  switch (spec.kind) {
    case Concept::EF: return is_ef(inst, alloc);
    case Concept::EF1: return is_ef_k(inst, alloc, 1);
    case Concept::EFk: return is_ef_k(inst, alloc, spec.k);
    case Concept::EFX: return is_efx(inst, alloc);
    case Concept::GFS: return is_gfs(inst, alloc);
    case Concept::GFS1: return is_gfs1(inst, alloc);
    case Concept::PropMax: return is_prop_max(inst, alloc);
    case Concept::PropAve: return is_prop_ave(inst, alloc);
    case Concept::KPProp: return is_k_p_prop(inst, alloc, spec.k);
    case Concept::EMMS: return is_emms(inst, alloc, max_outcomes);
  }
  throw std::invalid_argument("unknown concept");
}

std::vector<ConceptSpec> default_concepts(const Instance& inst) {
  return {{Concept::EF, 0},      {Concept::EF1, 1},     {Concept::EFX, 0},
          {Concept::GFS, 0},     {Concept::GFS1, 0},    {Concept::PropMax, 0},
          {Concept::PropAve, 0}, {Concept::KPProp, inst.agents()}, {Concept::EMMS, 0}};
}

FairnessReport full_report(const Instance& inst, const Allocation& alloc,
                           const ReportOptions& options) {
  FairnessReport report;
  report.profile = shares(inst);
  const std::vector<ConceptSpec> concepts =
      options.concepts.empty() ? default_concepts(inst) : options.concepts;
  for (const ConceptSpec& spec : concepts) {
    const std::string name = concept_name(spec);
    if (spec.kind == Concept::EMMS) {
      try {
        report.profile = with_emms(inst, std::move(report.profile), options.max_outcomes);
      } catch (const CapacityError& e) {
        report.skipped[name] = e.what();
        continue;
      }
    }
    report.entries[name] = ReportEntry{spec, evaluate(inst, alloc, spec, options.max_outcomes)};
  }
  return report;
}

bool verify_witnesses(const Instance& inst, const Allocation& alloc, const FairnessReport& report) {
  const FairShareProfile fresh = shares(inst);
  for (const auto& [name, entry] : report.entries) {
    const Verdict& v = entry.verdict;
    if (!v.holds && !v.violation) return false;
    switch (entry.spec.kind) {
      case Concept::EF:
      case Concept::EF1:
      case Concept::EFk: {
        const std::size_t k = entry.spec.kind == Concept::EF ? 0 : entry.spec.k;
        for (const Witness& c : v.certificates) {
          if (!c.other || c.items.size() > k) return false;
          if (margin_without(inst, alloc, c.agent, *c.other, c.items).sign() < 0) return false;
        }
        if (v.violation) {
          const Witness& w = *v.violation;
          if (!w.other || w.items.size() > k) return false;
          if (margin_without(inst, alloc, w.agent, *w.other, {}).sign() >= 0) return false;
          if (margin_without(inst, alloc, w.agent, *w.other, w.items).sign() >= 0) return false;
        }
        break;
      }
      case Concept::EFX:
        if (v.violation) {
          const Witness& w = *v.violation;
          if (!w.other || w.items.size() != 1) return false;
          const Value before = margin_without(inst, alloc, w.agent, *w.other, {});
          const Value after = margin_without(inst, alloc, w.agent, *w.other, w.items);
          if (!(before.sign() < 0 && after > before && after.sign() < 0)) return false;
        }
        break;
      case Concept::GFS:
      case Concept::PropMax:
      case Concept::PropAve: {
        if (!v.violation) break;
        const AgentShares& s = fresh.agents[v.violation->agent];
        const Value threshold = entry.spec.kind == Concept::GFS       ? gfs_threshold(s)
                                : entry.spec.kind == Concept::PropMax ? s.prop_max
                                                                         : s.prop_ave;
        if (total_value(inst, alloc, v.violation->agent) >= threshold) return false;
        break;
      }
      case Concept::GFS1: {
        for (const Witness& c : v.certificates) {
          const Value threshold = gfs_threshold(fresh.agents[c.agent]);
          Value value = total_value(inst, alloc, c.agent);
          for (ItemId a : c.items) value += inst.max_value(c.agent, a) - inst.value(c.agent, a, alloc.owner(a));
          if (c.items.size() > 1 || value < threshold) return false;
        }
        if (v.violation) {
          const AgentId i = v.violation->agent;
          const Value threshold = gfs_threshold(fresh.agents[i]);
          const Value value = total_value(inst, alloc, i);
          if (value >= threshold) return false;
          for (std::size_t a = 0; a < alloc.size(); ++a) {
            if (value - inst.value(i, a, alloc.owner(a)) + inst.max_value(i, a) >= threshold) return false;
          }
        }
        break;
      }
      case Concept::KPProp:
        if (v.violation) {
          const Witness& w = *v.violation;
          const auto in_group = [&](AgentId j) {
            return std::find(w.group.begin(), w.group.end(), j) != w.group.end();
          };
          if (!in_group(w.agent) || w.group.size() > entry.spec.k) return false;
          Value held;
          Value group_sum;
          for (std::size_t a = 0; a < alloc.size(); ++a) {
            if (!in_group(alloc.owner(a))) continue;
            held += inst.value(w.agent, a, alloc.owner(a));
            for (AgentId j : w.group) group_sum += inst.value(w.agent, a, j);
          }
          const Value share = group_sum / Value(static_cast<std::int64_t>(w.group.size()));
          if (held >= share) return false;
        }
        break;
      case Concept::EMMS:
        if (v.violation) {
          const auto& emms = report.profile.agents[v.violation->agent].emms;
          if (!emms || total_value(inst, alloc, v.violation->agent) >= *emms) return false;
        }
        break;
    }
  }
  return true;
}

}  // namespace extfair
