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

// Acceptance suite. One line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "extfair/errors.hpp"
#include "extfair/fairness.hpp"
#include "extfair/io.hpp"
#include "extfair/known_instances.hpp"
#include "extfair/maxmin_rr.hpp"
#include "extfair/oracle.hpp"
#include "extfair/three_binary.hpp"
#include "extfair/two_agent.hpp"
#include "support/naive.hpp"

namespace {

using namespace extfair;
using Clock = std::chrono::steady_clock;

// Time limits, seconds.
constexpr double kLimitExample1 = 0.001;
constexpr double kLimitTable2 = 1.0;
constexpr double kLimitTwoAgentEfx = 30.0;
constexpr double kLimitLargeEf1 = 5.0;
constexpr double kLimitThreeBinary = 300.0;
constexpr double kLimitRoundRobin = 60.0;

constexpr std::uint64_t kSeed = 42;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixture(const std::string& name) { return std::string(EXTFAIR_FIXTURES) + "/" + name; }

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

Outcome example1() {
  const Instance inst = io::load_instance_file(fixture("table1.json"));
  const Allocation pi = io::allocation_from_json(io::parse_file(fixture("table1_pi.json")), inst);
  const auto start = Clock::now();
  // V_2(pi) - V_2(pi^{1<->2}) is the negated envy amount of agent 2 towards 1.
  const Value difference = -envy_amount(inst, pi, 1, 0);
  const Value after_b = naive::margin(inst, pi, 1, 0, {false, true, false});
  const double t = seconds_since(start);
  const bool pass = difference == Value(-3) && after_b == Value(-4) && t < kLimitExample1;
  return {pass, "difference " + difference.to_string() + " (want -3), without b " + after_b.to_string() +
                    " (want -4), " + fmt_seconds(t) + " < 1 ms"};
}

Outcome example2() {
  const Instance inst = io::load_instance_file(fixture("table1.json"));
  const Allocation pi = io::allocation_from_json(io::parse_file(fixture("table1_pi_prime.json")), inst);
  const Verdict ef1 = is_ef_k(inst, pi, 1);
  const Verdict efx = is_efx(inst, pi);
  bool pass = ef1.holds && ef1.certificates.size() == 1 && ef1.certificates[0].agent == 0 &&
              ef1.certificates[0].items == std::vector<ItemId>{0};
  const Value after_a = naive::margin(inst, pi, 0, 1, {true, false, false});
  pass = pass && after_a == Value(0);
  pass = pass && !efx.holds && efx.violation && efx.violation->agent == 0 &&
         efx.violation->items == std::vector<ItemId>{1};
  const Value after_b = naive::margin(inst, pi, 0, 1, {false, true, false});
  pass = pass && after_b == Value(-1);
  return {pass, std::string("EF1 ") + (ef1.holds ? "true" : "false") + " removing {a} leaves " +
                    after_a.to_string() + "; EFX " + (efx.holds ? "true" : "false") + " witness b leaves " +
                    after_b.to_string()};
}

Outcome table2() {
  const Instance inst = io::load_instance_file(fixture("table2.json"));
  const auto start = Clock::now();
  const auto r = oracle::exists_allocation(inst, ConceptSpec{Concept::EFX, 0});
  const double t = seconds_since(start);
  const bool pass = r.total == 2187 && r.count == 0 && t < kLimitTable2;
  return {pass, std::to_string(r.count) + " EFX allocations among " + std::to_string(r.total) + ", " +
                    fmt_seconds(t) + " < 1 s"};
}

Outcome two_agent_efx_suite() {
  const auto start = Clock::now();
  std::mt19937_64 rng(kSeed);
  int failed = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    GeneratorOptions o;
    o.agents = 2;
    o.items = rng() % 13;
    o.min_value = -10;
    o.max_value = 10;
    o.seed = rng();
    const Instance inst = random_instance(o);
    if (!is_efx(inst, two_agent::two_agent_efx(inst)).holds) ++failed;
  }
  const double t = seconds_since(start);
  return {failed == 0 && t < kLimitTwoAgentEfx,
          std::to_string(failed) + " failures over 1000 instances, " + fmt_seconds(t) + " < 30 s"};
}

Outcome large_ef1() {
  GeneratorOptions o;
  o.agents = 2;
  o.items = 1'000'000;
  o.min_value = -10;
  o.max_value = 10;
  o.seed = kSeed;
  const Instance inst = random_instance(o);
  const auto start = Clock::now();
  const Allocation a = two_agent::two_agent_ef1(inst);
  const double t = seconds_since(start);
  const bool ok = is_ef_k(inst, a, 1).holds;
  return {ok && t < kLimitLargeEf1,
          std::string("EF1 ") + (ok ? "true" : "false") + " on 10^6 items, solver " + fmt_seconds(t) + " < 5 s"};
}

Outcome three_binary_suite() {
  const auto start = Clock::now();
  std::mt19937_64 rng(kSeed);
  int failed = 0;
  std::size_t widest_kernel = 0;
  for (int trial = 0; trial < 10'000; ++trial) {
    GeneratorOptions o;
    o.agents = 3;
    o.items = rng() % 31;
    o.binary = true;
    o.no_chore = true;
    o.seed = rng();
    const Instance inst = random_instance(o);
    const auto sol = three_binary::solve_traced(inst);
    widest_kernel = std::max(widest_kernel, sol.trace.kernel.size());
    if (!is_ef_k(inst, sol.allocation, 1).holds) ++failed;
  }
  const auto configs = three_binary::kernel_configurations(2);
  int unsolved = 0;
  std::size_t largest = 0;
  for (const auto& items : configs) {
    largest = std::max(largest, items.size());
    try {
      const auto owners = three_binary::solve_kernel(items);
      std::vector<std::optional<AgentId>> opt(owners.begin(), owners.end());
      if (!three_binary::ef1_no_mutual_envy(three_binary::margins(items, opt))) ++unsolved;
    } catch (const SolverError&) {
      ++unsolved;
    }
  }
  const double t = seconds_since(start);
  const bool pass = failed == 0 && unsolved == 0 && !configs.empty() && t < kLimitThreeBinary;
  return {pass, std::to_string(failed) + " failures over 10000 instances (largest kernel " +
                    std::to_string(widest_kernel) + "); " + std::to_string(unsolved) + " unsolved of " +
                    std::to_string(configs.size()) + " kernel configurations (up to " + std::to_string(largest) +
                    " items), " + fmt_seconds(t) + " < 300 s"};
}

Outcome round_robin_suite() {
  const auto start = Clock::now();
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> value(-10, 10);
  int failed = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const std::size_t m = rng() % 21;
    std::vector<Issue> issues;
    for (std::size_t a = 0; a < m; ++a) {
      Issue issue;
      issue.name = "i" + std::to_string(a);
      const std::size_t c = 1 + rng() % 4;
      for (std::size_t k = 0; k < c; ++k) issue.choices.push_back(std::to_string(k + 1));
      issue.values.assign(n, std::vector<Value>(c));
      for (auto& row : issue.values) {
        for (auto& v : row) v = value(rng);
      }
      issues.push_back(std::move(issue));
    }
    const PdmInstance pdm(n, std::move(issues));
    std::vector<AgentId> order(n);
    std::iota(order.begin(), order.end(), AgentId{0});
    for (int k = 0; k < 10; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      const PdmOutcome out = maxmin_rr::max_min_round_robin(pdm, order);
      if (!maxmin_rr::gfs1_check_pdm(pdm, out).holds) ++failed;
    }
  }
  const double t = seconds_since(start);
  return {failed == 0 && t < kLimitRoundRobin,
          std::to_string(failed) + " failures over 1000 instances x 10 orders, " + fmt_seconds(t) + " < 60 s"};
}

Outcome lattice_audit() {
  const auto start = Clock::now();
  const auto audit = oracle::run_lattice_audit(10'000, kSeed);
  const double t = seconds_since(start);
  const std::set<std::string> required{
      "EF => EFX",      "EFX => EF1",           "EF1 => EF2",           "EF2 => EF3",
      "EF => 2-P-PROP", "n-P-PROP => 2-P-PROP", "n-P-PROP => PROP-Ave", "PROP-Ave => GFS",
      "PROP-Ave => EMMS", "GFS => GFS1",        "GFS => PROP-Max (nonnegative floor)"};
  std::set<std::string> seen;
  std::uint64_t counterexamples = 0;
  bool full = true;
  for (const auto& e : audit.edges) {
    seen.insert(e.edge);
    counterexamples += e.counterexamples;
    if (e.skipped || e.trials - e.filtered < 10'000) full = false;
  }
  bool covered = std::includes(seen.begin(), seen.end(), required.begin(), required.end());
  std::size_t confirmed = 0;
  for (const auto& n : audit.non_edges) confirmed += n.confirmed;
  const bool pass = audit.passed() && covered && full && confirmed == 3 && audit.non_edges.size() == 3;
  return {pass, std::to_string(counterexamples) + " counterexamples over " + std::to_string(audit.edges.size()) +
                    " edges x 10^4 samples; " + std::to_string(confirmed) + "/3 non-edges confirmed, " +
                    fmt_seconds(t)};
}

Outcome oracle_consistency() {
  std::mt19937_64 rng(kSeed);
  int count_mismatch = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const std::size_t m = rng() % 9;
    GeneratorOptions o;
    o.agents = n;
    o.items = m;
    o.seed = rng();
    const Instance inst = random_instance(o);
    const auto r = oracle::exists_allocation(inst, [](const Allocation&) { return true; });
    std::uint64_t power = 1;
    for (std::size_t k = 0; k < m; ++k) power *= n;
    if (r.count != power || r.total != power) ++count_mismatch;
  }
  int emms_mismatch = 0;
  int checked = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 0; m <= 6; ++m) {
      for (int rep = 0; rep < 3; ++rep) {
        GeneratorOptions o;
        o.agents = n;
        o.items = m;
        o.min_value = -10;
        o.max_value = 10;
        o.seed = rng();
        const Instance inst = random_instance(o);
        for (AgentId i = 0; i < n; ++i) {
          ++checked;
          if (oracle::emms_exact(inst, i) != naive::emms_by_labels(inst, i)) ++emms_mismatch;
        }
      }
    }
  }
  return {count_mismatch == 0 && emms_mismatch == 0,
          std::to_string(count_mismatch) + " count mismatches over 100 shapes; " + std::to_string(emms_mismatch) +
              " EMMS disagreements over " + std::to_string(checked) + " agent shares"};
}

}  // namespace

int main() {
  report(1, "swap envy arithmetic", example1);
  report(2, "EF1 but not EFX verdicts", example2);
  report(3, "no EFX allocation on the three-agent instance", table2);
  report(4, "two-agent EFX property suite", two_agent_efx_suite);
  report(5, "two-agent EF1 at one million items", large_ef1);
  report(6, "three-agent binary EF1 suite and kernel families", three_binary_suite);
  report(7, "max-min round robin GFS1 suite", round_robin_suite);
  report(8, "implication lattice audit", lattice_audit);
  report(9, "oracle self-consistency", oracle_consistency);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
