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

#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "extfair/errors.hpp"
#include "extfair/fairness.hpp"
#include "extfair/io.hpp"
#include "extfair/maxmin_rr.hpp"
#include "extfair/model.hpp"
#include "extfair/oracle.hpp"
#include "extfair/three_binary.hpp"
#include "extfair/two_agent.hpp"

namespace extfair::cli {
namespace {

using json = nlohmann::json;

// Writes to a sibling temp file and renames it over the target.
void write_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw InputError("cannot open for writing", path);
    file << text;
    if (!file.flush()) throw InputError("write failed", path);
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw InputError("cannot replace file: " + ec.message(), path);
  }
}

void emit(const json& doc, const std::string& out_path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_atomic(out_path, text);
  }
}

// Runs a loader and names the file in any diagnostic it raises.
template <typename Load>
auto from_file(const std::string& file, Load load) {
  try {
    return load(file);
  } catch (const InputError& e) {
    throw InputError(file + ": " + e.what());
  }
}

Instance read_instance(const std::string& file) { return from_file(file, io::load_instance_file); }

PdmInstance read_pdm(const std::string& file) { return from_file(file, io::load_pdm_file); }

Allocation read_allocation(const std::string& file, const Instance& inst) {
  return from_file(file, [&](const std::string& f) { return io::allocation_from_json(io::parse_file(f), inst); });
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

std::vector<AgentId> parse_order(const std::string& text, std::size_t agents) {
  std::vector<AgentId> order;
  for (const auto& part : split_list(text)) {
    std::size_t used = 0;
    long long id = 0;
    try {
      id = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || id < 1 || static_cast<std::size_t>(id) > agents) {
      throw InputError("bad agent '" + part + "'", "--order");
    }
    order.push_back(static_cast<AgentId>(id - 1));
  }
  return order;
}

struct CheckConfig {
  std::string instance;
  std::string allocation;
  std::string concepts;
  std::size_t k = 1;
  std::optional<std::size_t> group;
  std::uint64_t max_outcomes = oracle::kDefaultMaxOutcomes;
  std::string out;
};

struct SolveConfig {
  std::string algorithm;
  std::string instance;
  std::string pdm;
  std::string order;
  std::string trace;
  std::string out;
};

struct EnumerateConfig {
  std::string predicate;
  std::string instance;
  std::size_t k = 1;
  std::uint64_t max_outcomes = oracle::kDefaultMaxOutcomes;
  std::string out;
};

struct AuditConfig {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 42;
  std::string out;
};

struct GenConfig {
  GeneratorOptions options;
  std::string out;
};

std::vector<ConceptSpec> requested_concepts(const Instance& inst, const CheckConfig& cfg) {
  if (cfg.concepts.empty()) return default_concepts(inst);
  std::vector<ConceptSpec> specs;
  for (const auto& id : split_list(cfg.concepts)) {
    ConceptSpec spec = parse_concept(id, cfg.k);
    if (spec.kind == Concept::KPProp) spec.k = cfg.group.value_or(inst.agents());
    specs.push_back(spec);
  }
  return specs;
}

int cmd_check(const CheckConfig& cfg, std::ostream& out) {
  const Instance inst = read_instance(cfg.instance);
  const Allocation alloc = read_allocation(cfg.allocation, inst);
  ReportOptions options;
  try {
    options.concepts = requested_concepts(inst, cfg);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what(), "--concepts");
  }
  options.max_outcomes = cfg.max_outcomes;
  const FairnessReport report = full_report(inst, alloc, options);
  emit(io::report_to_json(inst, report), cfg.out, out);
  for (const auto& [name, entry] : report.entries) {
    if (!entry.verdict.holds) return kPropertyViolated;
  }
  return kOk;
}

int cmd_solve(const SolveConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string& alg = cfg.algorithm;
  if (alg == "maxmin-rr") {
    if (cfg.pdm.empty() == cfg.instance.empty()) {
      throw InputError("exactly one of --pdm and --instance is required", "--pdm");
    }
    const PdmInstance pdm = cfg.pdm.empty() ? to_public_decision(read_instance(cfg.instance))
                                            : read_pdm(cfg.pdm);
    std::optional<std::vector<AgentId>> order;
    if (!cfg.order.empty()) order = parse_order(cfg.order, pdm.agents());
    maxmin_rr::RoundRobinResult result;
    try {
      result = maxmin_rr::max_min_round_robin_traced(pdm, order);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what(), "--order");
    }
    if (!maxmin_rr::gfs1_check_pdm(pdm, result.outcome).holds) {
      err << "error: round-robin outcome failed the GFS1 check\n";
      return kInternalFailure;
    }
    if (!cfg.trace.empty()) {
      json picks = json::array();
      for (const auto& p : result.picks) {
        picks.push_back(json{{"agent", p.agent + 1},
                             {"issue", pdm.issues()[p.issue].name},
                             {"choice", pdm.issues()[p.issue].choices[p.choice]}});
      }
      write_atomic(cfg.trace, json{{"picks", std::move(picks)}}.dump(2) + "\n");
    }
    emit(io::outcome_to_json(pdm, result.outcome), cfg.out, out);
    return kOk;
  }

  if (!cfg.pdm.empty()) throw InputError("this algorithm takes --instance", "--pdm");
  if (cfg.instance.empty()) throw InputError("--instance is required", "--instance");
  if (!cfg.order.empty()) throw InputError("only maxmin-rr takes an order", "--order");
  const Instance inst = read_instance(cfg.instance);

  Allocation alloc;
  Verdict check;
  std::optional<json> trace;
  if (alg == "two-efx") {
    alloc = two_agent::two_agent_efx(inst);
    check = is_efx(inst, alloc);
  } else if (alg == "two-ef1") {
    alloc = two_agent::two_agent_ef1(inst);
    check = is_ef_k(inst, alloc, 1);
  } else if (alg == "three-binary-ef1") {
    auto solution = three_binary::solve_traced(inst);
    alloc = std::move(solution.allocation);
    check = is_ef_k(inst, alloc, 1);
    trace = io::trace_to_json(inst, solution.trace);
  } else {
    throw InputError("unknown algorithm '" + alg + "'", "--algorithm");
  }
  if (!cfg.trace.empty() && !trace) throw InputError("no trace for this algorithm", "--trace");
  if (!check.holds) {
    err << "error: " << alg << " output failed self-verification\n";
    return kInternalFailure;
  }
  if (!cfg.trace.empty()) write_atomic(cfg.trace, trace->dump(2) + "\n");
  emit(io::allocation_to_json(inst, alloc), cfg.out, out);
  return kOk;
}

int cmd_enumerate(const EnumerateConfig& cfg, std::ostream& out) {
  const Instance inst = read_instance(cfg.instance);
  ConceptSpec spec;
  try {
    spec = parse_concept(cfg.predicate, cfg.k);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what(), "--predicate");
  }
  const auto result = oracle::exists_allocation(inst, spec, cfg.max_outcomes);
  json doc{{"predicate", concept_name(spec)}, {"count", result.count}, {"total", result.total}};
  doc["first_witness"] = result.first ? io::allocation_to_json(inst, *result.first) : json(nullptr);
  emit(doc, cfg.out, out);
  return kOk;
}

int cmd_audit(const AuditConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto audit = oracle::run_lattice_audit(cfg.trials, cfg.seed);
  json edges = json::array();
  for (const auto& e : audit.edges) {
    json node{{"edge", e.edge},
              {"trials", e.trials},
              {"premise_held", e.premise_held},
              {"filtered", e.filtered},
              {"counterexamples", e.counterexamples}};
    if (e.skipped) {
      node["skipped"] = *e.skipped;
      err << "warning: edge " << e.edge << " skipped: " << *e.skipped << "\n";
    }
    if (e.first_counterexample) {
      const auto& c = *e.first_counterexample;
      node["first_counterexample"] = json{{"instance", io::instance_to_json(c.instance)},
                                          {"allocation", io::allocation_to_json(c.instance, c.allocation)}};
    }
    edges.push_back(std::move(node));
  }
  json non_edges = json::array();
  for (const auto& n : audit.non_edges) {
    non_edges.push_back(json{{"name", n.name},
                             {"premise", n.premise},
                             {"conclusion", n.conclusion},
                             {"confirmed", n.confirmed}});
  }
  const bool passed = audit.passed();
  emit(json{{"seed", cfg.seed},
            {"trials", cfg.trials},
            {"edges", std::move(edges)},
            {"non_edges", std::move(non_edges)},
            {"passed", passed}},
       cfg.out, out);
  return passed ? kOk : kPropertyViolated;
}

int cmd_gen(const GenConfig& cfg, std::ostream& out) {
  Instance inst = [&] {
    try {
      return random_instance(cfg.options);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what(), "gen");
    }
  }();
  emit(io::instance_to_json(inst), cfg.out, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fair division with externalities: checkers, solvers and oracles"};
  app.name(args.empty() ? "extfair" : std::filesystem::path(args[0]).filename().string());
  app.require_subcommand(1);

  CheckConfig check;
  auto* check_cmd = app.add_subcommand("check", "Evaluate fairness concepts on an allocation");
  check_cmd->add_option("--instance", check.instance, "Instance JSON")->required();
  check_cmd->add_option("--allocation", check.allocation, "Allocation JSON")->required();
  check_cmd->add_option("--concepts", check.concepts,
                        "Comma list: ef,ef1,efk,efx,gfs,gfs1,prop-max,prop-ave,kpprop,emms");
  check_cmd->add_option("--k", check.k, "Removal budget for efk")->check(CLI::PositiveNumber);
  check_cmd->add_option("--group", check.group, "Group size for kpprop (default n)");
  check_cmd->add_option("--max-outcomes", check.max_outcomes, "Capacity guard for EMMS");
  check_cmd->add_option("--out", check.out, "Write the report here instead of stdout");

  SolveConfig solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run a constructive algorithm and self-verify");
  solve_cmd->add_option("--algorithm", solve.algorithm, "two-efx | two-ef1 | three-binary-ef1 | maxmin-rr")
      ->required()
      ->check(CLI::IsMember({"two-efx", "two-ef1", "three-binary-ef1", "maxmin-rr"}));
  solve_cmd->add_option("--instance", solve.instance, "Instance JSON");
  solve_cmd->add_option("--pdm", solve.pdm, "Public decision instance JSON (maxmin-rr)");
  solve_cmd->add_option("--order", solve.order, "Round-robin order, e.g. 3,1,2 (maxmin-rr)");
  solve_cmd->add_option("--trace", solve.trace, "Write the solver trace here");
  solve_cmd->add_option("--out", solve.out, "Write the result here instead of stdout");

  EnumerateConfig enumerate;
  auto* enum_cmd = app.add_subcommand("enumerate", "Count allocations satisfying a concept");
  enum_cmd->add_option("--predicate", enumerate.predicate, "Concept id, e.g. efx")->required();
  enum_cmd->add_option("--instance", enumerate.instance, "Instance JSON")->required();
  enum_cmd->add_option("--k", enumerate.k, "Parameter for efk / kpprop")->check(CLI::PositiveNumber);
  enum_cmd->add_option("--max-outcomes", enumerate.max_outcomes, "Refuse instances with more outcomes");
  enum_cmd->add_option("--out", enumerate.out, "Write the result here instead of stdout");

  AuditConfig audit;
  auto* audit_cmd = app.add_subcommand("audit", "Sample the implication lattice for counterexamples");
  audit_cmd->add_option("--trials", audit.trials, "Samples per edge")->capture_default_str();
  audit_cmd->add_option("--seed", audit.seed, "Base seed")->capture_default_str();
  audit_cmd->add_option("--out", audit.out, "Write the report here instead of stdout");

  GenConfig gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--agents", gen.options.agents, "Number of agents")->capture_default_str();
  gen_cmd->add_option("--items", gen.options.items, "Number of items")->capture_default_str();
  gen_cmd->add_option("--min", gen.options.min_value, "Smallest value")->capture_default_str();
  gen_cmd->add_option("--max", gen.options.max_value, "Largest value")->capture_default_str();
  gen_cmd->add_flag("--binary", gen.options.binary, "Values in {0,1}");
  gen_cmd->add_flag("--no-chore", gen.options.no_chore, "Owning an item is weakly best for every agent");
  gen_cmd->add_flag("--nonneg", gen.options.nonneg, "Clamp the lower bound at 0");
  gen_cmd->add_option("--seed", gen.options.seed, "Seed")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Write the instance here instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("extfair");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check_cmd) return cmd_check(check, out);
    if (*solve_cmd) return cmd_solve(solve, out, err);
    if (*enum_cmd) return cmd_enumerate(enumerate, out);
    if (*audit_cmd) return cmd_audit(audit, out, err);
    if (*gen_cmd) return cmd_gen(gen, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const UnsupportedInstance& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const SolverError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace extfair::cli
