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

#ifndef EXTFAIR_FAIRNESS_HPP
#define EXTFAIR_FAIRNESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extfair/model.hpp"

namespace extfair {

/// Evidence attached to a verdict. Which fields are set depends on the
/// concept: envy concepts use (agent, other, items), share concepts use
/// (agent, items), k-P-PROP uses (agent, group).
struct Witness {
  AgentId agent = 0;
  std::optional<AgentId> other;
  std::vector<ItemId> items;
  std::vector<AgentId> group;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// `violation` is always set when `holds` is false. `certificates` lists the
/// removal sets or items that make a relaxed concept hold, one per agent or
/// envious pair that needed one.
struct Verdict {
  bool holds = true;
  std::optional<Witness> violation;
  std::vector<Witness> certificates;
};

/// V_i(pi^{i<->j}) - V_i(pi). Positive means i envies j. Throws
/// std::invalid_argument when i == j.
Value envy_amount(const Instance& inst, const Allocation& alloc, AgentId i, AgentId j);

Verdict is_ef(const Instance& inst, const Allocation& alloc);

/// Envy-freeness after deleting at most k items from the whole allocation.
/// Deleted items contribute to nobody's value, externalities included.
Verdict is_ef_k(const Instance& inst, const Allocation& alloc, std::size_t k);

/// Every single-item deletion that strictly lowers i's envy of j must remove
/// it. Deletions that leave the envy unchanged or raise it are exempt.
Verdict is_efx(const Instance& inst, const Allocation& alloc);

struct AgentShares {
  Value gfs;        // (1/n) sum_a (max_a - min_a)
  Value prop_max;   // (1/n) sum_a max_a
  Value prop_ave;   // (1/n) sum_a sum_j value(i, a, j)
  Value min_floor;  // sum_a min_a
  std::optional<Value> emms;
};

struct FairShareProfile {
  std::vector<AgentShares> agents;
};

/// Shares for every agent; `emms` is left empty (see with_emms).
FairShareProfile shares(const Instance& inst);

/// Fills `emms` for every agent via exhaustive partition search. Throws
/// CapacityError when the search exceeds `max_outcomes`.
FairShareProfile with_emms(const Instance& inst, FairShareProfile profile,
                           std::uint64_t max_outcomes = 10'000'000);

Verdict is_gfs(const Instance& inst, const Allocation& alloc);
/// Certificate per agent: the item whose upgrade to the agent's best owner
/// closes the gap. An agent that already meets GFS needs no item.
Verdict is_gfs1(const Instance& inst, const Allocation& alloc);
Verdict is_prop_max(const Instance& inst, const Allocation& alloc);
Verdict is_prop_ave(const Instance& inst, const Allocation& alloc);

/// For every agent i and every group G containing i with |G| <= k, the value
/// i gets from the items held by G (with their current owners) is at least
/// (1/|G|) * sum over those items of sum_{j in G} value(i, a, j). With G = N
/// this is PROP-Ave.
/// Throws std::invalid_argument unless 1 <= k <= n.
Verdict is_k_p_prop(const Instance& inst, const Allocation& alloc, std::size_t k);

/// Throws CapacityError when n^m exceeds `max_outcomes`.
Verdict is_emms(const Instance& inst, const Allocation& alloc,
                std::uint64_t max_outcomes = 10'000'000);

// ---------------------------------------------------------------------------
// Concept dispatch

enum class Concept { EF, EF1, EFk, EFX, GFS, GFS1, PropMax, PropAve, KPProp, EMMS };

struct ConceptSpec {
  Concept kind = Concept::EF;
  std::size_t k = 1;  // EFk removal budget or k-P-PROP group size

  friend bool operator==(const ConceptSpec&, const ConceptSpec&) = default;
};

/// Display name used in reports: "EF", "EF1", "EF2", "EFX", "GFS", "GFS1",
/// "PROP-Max", "PROP-Ave", "2-P-PROP", "EMMS".
std::string concept_name(const ConceptSpec& spec);

/// Accepts "ef", "ef1", "efk", "efx", "gfs", "gfs1", "prop-max", "prop-ave",
/// "kpprop", "emms" (case-insensitive). `k` fills the parameter for efk and
/// kpprop. Throws std::invalid_argument on an unknown id.
ConceptSpec parse_concept(const std::string& id, std::size_t k = 1);

Verdict evaluate(const Instance& inst, const Allocation& alloc, const ConceptSpec& spec,
                 std::uint64_t max_outcomes = 10'000'000);

struct ReportOptions {
  std::vector<ConceptSpec> concepts;  // empty: the default set below
  std::uint64_t max_outcomes = 10'000'000;
};

/// Default concept set: EF, EF1, EFX, GFS, GFS1, PROP-Max, PROP-Ave,
/// n-P-PROP and EMMS.
std::vector<ConceptSpec> default_concepts(const Instance& inst);

struct ReportEntry {
  ConceptSpec spec;
  Verdict verdict;
};

struct FairnessReport {
  /// Keyed by concept_name().
  std::map<std::string, ReportEntry> entries;
  /// Concepts requested but not decided, with the reason (capacity guard).
  std::map<std::string, std::string> skipped;
  FairShareProfile profile;
};

/// Runs every requested predicate. EMMS is skipped and listed in `skipped`
/// when the capacity guard fails rather than approximated.
FairnessReport full_report(const Instance& inst, const Allocation& alloc,
                           const ReportOptions& options = {});

/// Re-evaluates every witness in the report from scratch; true iff every
/// violation really violates and every certificate really certifies.
bool verify_witnesses(const Instance& inst, const Allocation& alloc, const FairnessReport& report);

}  // namespace extfair

#endif  // EXTFAIR_FAIRNESS_HPP
