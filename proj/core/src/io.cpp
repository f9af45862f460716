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

#include "extfair/io.hpp"

#include <fstream>
#include <istream>
#include <set>

#include "extfair/errors.hpp"

namespace extfair::io {

namespace {

const json& field(const json& doc, const char* key, const std::string& path) {
  if (!doc.is_object()) throw InputError("expected an object", path.empty() ? "/" : path);
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("missing field '") + key + "'", path + "/" + key);
  return *it;
}

std::size_t positive_count(const json& node, const std::string& path) {
  if (!node.is_number_integer() || node.get<std::int64_t>() < 1) {
    throw InputError("expected a positive integer", path);
  }
  return node.get<std::size_t>();
}

const json& array_at(const json& node, const std::string& path) {
  if (!node.is_array()) throw InputError("expected an array", path);
  return node;
}

std::string string_at(const json& node, const std::string& path) {
  if (!node.is_string()) throw InputError("expected a string", path);
  return node.get<std::string>();
}

json witness_to_json(const Instance& inst, const Witness& w) {
  json out;
  out["agent"] = w.agent + 1;
  if (w.other) out["other"] = *w.other + 1;
  if (!w.items.empty()) {
    json items = json::array();
    for (ItemId a : w.items) items.push_back(inst.items()[a]);
    out["items"] = std::move(items);
  }
  if (!w.group.empty()) {
    json group = json::array();
    for (AgentId j : w.group) group.push_back(j + 1);
    out["group"] = std::move(group);
  }
  return out;
}

}  // namespace

Value value_from_json(const json& node, const std::string& path) {
  if (node.is_number_integer()) return Value(node.get<std::int64_t>());
  if (node.is_string()) {
    try {
      return Value::parse(node.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(e.what(), path);
    }
  }
  throw InputError("expected an integer or a \"p/q\" string", path);
}

json value_to_json(const Value& value) {
  if (value.is_integer()) return value.numerator();
  return value.to_string();
}

Instance instance_from_json(const json& doc) {
  const std::size_t n = positive_count(field(doc, "agents", ""), "/agents");
  const json& items_node = array_at(field(doc, "items", ""), "/items");
  std::vector<std::string> items;
  for (std::size_t k = 0; k < items_node.size(); ++k) {
    items.push_back(string_at(items_node[k], "/items/" + std::to_string(k)));
  }
  const json& rows = array_at(field(doc, "values", ""), "/values");
  std::vector<std::vector<std::vector<Value>>> values(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string row_path = "/values/" + std::to_string(i);
    const json& row = array_at(rows[i], row_path);
    for (std::size_t k = 0; k < row.size(); ++k) {
      const std::string cell_path = row_path + "/" + std::to_string(k);
      const json& cell = array_at(row[k], cell_path);
      std::vector<Value> owners;
      for (std::size_t j = 0; j < cell.size(); ++j) {
        owners.push_back(value_from_json(cell[j], cell_path + "/" + std::to_string(j)));
      }
      values[i].push_back(std::move(owners));
    }
  }
  return Instance(n, std::move(items), values);
}

json instance_to_json(const Instance& inst) {
  json values = json::array();
  for (AgentId i = 0; i < inst.agents(); ++i) {
    json row = json::array();
    for (ItemId a = 0; a < inst.item_count(); ++a) {
      json cell = json::array();
      for (AgentId j = 0; j < inst.agents(); ++j) cell.push_back(value_to_json(inst.value(i, a, j)));
      row.push_back(std::move(cell));
    }
    values.push_back(std::move(row));
  }
  return json{{"agents", inst.agents()}, {"items", inst.items()}, {"values", std::move(values)}};
}

Allocation allocation_from_json(const json& doc, const Instance& inst) {
  const json& assignment = field(doc, "assignment", "");
  if (!assignment.is_object()) throw InputError("expected an object", "/assignment");
  std::vector<std::optional<AgentId>> owners(inst.item_count());
  for (const auto& [name, agent] : assignment.items()) {
    const std::string path = "/assignment/" + name;
    auto item = inst.find_item(name);
    if (!item) throw InputError("unknown item", path);
    if (!agent.is_number_integer()) throw InputError("expected an agent number", path);
    const auto id = agent.get<std::int64_t>();
    if (id < 1 || static_cast<std::size_t>(id) > inst.agents()) {
      throw InputError("agent " + std::to_string(id) + " out of range", path);
    }
    owners[*item] = static_cast<AgentId>(id - 1);
  }
  std::vector<AgentId> complete;
  for (ItemId a = 0; a < owners.size(); ++a) {
    if (!owners[a]) throw InputError("item is not assigned", "/assignment/" + inst.items()[a]);
    complete.push_back(*owners[a]);
  }
  return Allocation::checked(inst, std::move(complete));
}

json allocation_to_json(const Instance& inst, const Allocation& alloc) {
  json assignment = json::object();
  for (ItemId a = 0; a < alloc.size(); ++a) assignment[inst.items()[a]] = alloc.owner(a) + 1;
  return json{{"assignment", std::move(assignment)}};
}

PdmInstance pdm_from_json(const json& doc) {
  const std::size_t n = positive_count(field(doc, "agents", ""), "/agents");
  const json& issues_node = array_at(field(doc, "issues", ""), "/issues");
  std::vector<Issue> issues;
  std::set<std::string> names;
  for (std::size_t a = 0; a < issues_node.size(); ++a) {
    const std::string path = "/issues/" + std::to_string(a);
    const json& node = issues_node[a];
    Issue issue;
    issue.name = string_at(field(node, "name", path), path + "/name");
    if (!names.insert(issue.name).second) throw InputError("duplicate issue name", path + "/name");
    const json& choices = array_at(field(node, "choices", path), path + "/choices");
    for (std::size_t t = 0; t < choices.size(); ++t) {
      issue.choices.push_back(string_at(choices[t], path + "/choices/" + std::to_string(t)));
    }
    const json& rows = array_at(field(node, "values", path), path + "/values");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string row_path = path + "/values/" + std::to_string(i);
      const json& row = array_at(rows[i], row_path);
      std::vector<Value> values;
      for (std::size_t t = 0; t < row.size(); ++t) {
        values.push_back(value_from_json(row[t], row_path + "/" + std::to_string(t)));
      }
      issue.values.push_back(std::move(values));
    }
    issues.push_back(std::move(issue));
  }
  return PdmInstance(n, std::move(issues));
}

json pdm_to_json(const PdmInstance& pdm) {
  json issues = json::array();
  for (const Issue& issue : pdm.issues()) {
    json rows = json::array();
    for (const auto& row : issue.values) {
      json values = json::array();
      for (const Value& v : row) values.push_back(value_to_json(v));
      rows.push_back(std::move(values));
    }
    issues.push_back(json{{"name", issue.name}, {"choices", issue.choices}, {"values", std::move(rows)}});
  }
  return json{{"agents", pdm.agents()}, {"issues", std::move(issues)}};
}

PdmOutcome outcome_from_json(const json& doc, const PdmInstance& pdm) {
  const json& choices = field(doc, "choices", "");
  if (!choices.is_object()) throw InputError("expected an object", "/choices");
  PdmOutcome outcome;
  for (std::size_t a = 0; a < pdm.issue_count(); ++a) {
    const Issue& issue = pdm.issues()[a];
    const std::string path = "/choices/" + issue.name;
    auto it = choices.find(issue.name);
    if (it == choices.end()) throw InputError("issue has no selected choice", path);
    const std::string label = string_at(*it, path);
    auto pos = std::find(issue.choices.begin(), issue.choices.end(), label);
    if (pos == issue.choices.end()) throw InputError("unknown choice '" + label + "'", path);
    outcome.choices.push_back(static_cast<std::size_t>(pos - issue.choices.begin()));
  }
  if (choices.size() != pdm.issue_count()) throw InputError("unknown issue in outcome", "/choices");
  return outcome;
}

json outcome_to_json(const PdmInstance& pdm, const PdmOutcome& outcome) {
  json choices = json::object();
  for (std::size_t a = 0; a < outcome.choices.size(); ++a) {
    choices[pdm.issues()[a].name] = pdm.issues()[a].choices[outcome.choices[a]];
  }
  return json{{"choices", std::move(choices)}};
}

json verdict_to_json(const Instance& inst, const Verdict& verdict) {
  json out{{"holds", verdict.holds}};
  if (verdict.violation) out["witness"] = witness_to_json(inst, *verdict.violation);
  if (!verdict.certificates.empty()) {
    json certificates = json::array();
    for (const Witness& c : verdict.certificates) certificates.push_back(witness_to_json(inst, c));
    out["certificates"] = std::move(certificates);
  }
  return out;
}

json report_to_json(const Instance& inst, const FairnessReport& report) {
  json out = json::object();
  for (const auto& [name, entry] : report.entries) out[name] = verdict_to_json(inst, entry.verdict);
  json profile = json::array();
  for (AgentId i = 0; i < report.profile.agents.size(); ++i) {
    const AgentShares& s = report.profile.agents[i];
    json row{{"agent", i + 1},
             {"gfs", s.gfs.to_string()},
             {"prop_max", s.prop_max.to_string()},
             {"prop_ave", s.prop_ave.to_string()},
             {"min_floor", s.min_floor.to_string()}};
    if (s.emms) row["emms"] = s.emms->to_string();
    profile.push_back(std::move(row));
  }
  out["shares"] = std::move(profile);
  if (!report.skipped.empty()) out["skipped"] = report.skipped;
  return out;
}

json trace_to_json(const Instance& inst, const three_binary::ReductionTrace& trace) {
  json steps = json::array();
  for (const auto& step : trace.steps) {
    json items = json::array();
    for (ItemId a : step.items) items.push_back(inst.items()[a]);
    json node{{"rule", three_binary::rule_name(step.rule)}, {"items", std::move(items)}};
    if (!step.owners.empty()) {
      json owners = json::array();
      for (AgentId j : step.owners) owners.push_back(j + 1);
      node["owners"] = std::move(owners);
    } else {
      node["deferred"] = true;
    }
    if (step.pool) node["pool"] = *step.pool + 1;
    steps.push_back(std::move(node));
  }
  json kernel = json::array();
  for (ItemId a : trace.kernel) kernel.push_back(inst.items()[a]);
  json leftovers = json::array();
  for (const auto& l : trace.leftovers) {
    leftovers.push_back(json{{"item", inst.items()[l.item]}, {"indifferent", l.indifferent + 1}});
  }
  return json{{"steps", std::move(steps)}, {"kernel", std::move(kernel)}, {"leftovers", std::move(leftovers)}};
}

json parse(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse(in);
}

Instance load_instance(std::istream& in) { return instance_from_json(parse(in)); }

Instance load_instance_file(const std::string& path) { return instance_from_json(parse_file(path)); }

PdmInstance load_pdm_file(const std::string& path) { return pdm_from_json(parse_file(path)); }

}  // namespace extfair::io
