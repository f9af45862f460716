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

#ifndef EXTFAIR_IO_HPP
#define EXTFAIR_IO_HPP

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "extfair/fairness.hpp"
#include "extfair/model.hpp"
#include "extfair/three_binary.hpp"

/// JSON documents. Agents are 1-based in every document and 0-based in
/// memory. Values are JSON integers or "p/q" strings.
///
///   instance:   {"agents": n, "items": ["a", ...], "values": [[[v]]]}
///               values[i][k][j] = value of agent i+1 when agent j+1 owns items[k]
///   allocation: {"assignment": {"a": 1, "b": 2}}
///   pdm:        {"agents": n, "issues": [{"name": "a", "choices": ["c1"], "values": [[v]]}]}
///               values[i][t] = value of agent i+1 for choice t
///   outcome:    {"choices": {"a": "c1"}}
///
/// Parse failures throw InputError carrying the JSON path of the problem.
namespace extfair::io {

using nlohmann::json;

Value value_from_json(const json& node, const std::string& path);
/// Integers as JSON numbers, fractions as "p/q".
json value_to_json(const Value& value);

Instance instance_from_json(const json& doc);
json instance_to_json(const Instance& inst);

Allocation allocation_from_json(const json& doc, const Instance& inst);
json allocation_to_json(const Instance& inst, const Allocation& alloc);

PdmInstance pdm_from_json(const json& doc);
json pdm_to_json(const PdmInstance& pdm);

PdmOutcome outcome_from_json(const json& doc, const PdmInstance& pdm);
json outcome_to_json(const PdmInstance& pdm, const PdmOutcome& outcome);

/// {"<concept>": {"holds": bool, "witness": {...}, "certificates": [...]},
///  "shares": [{"agent": 1, "gfs": "p/q", ...}], "skipped": {...}}
json report_to_json(const Instance& inst, const FairnessReport& report);
json verdict_to_json(const Instance& inst, const Verdict& verdict);

json trace_to_json(const Instance& inst, const three_binary::ReductionTrace& trace);

/// Parses a whole document; malformed JSON becomes an InputError.
json parse(std::istream& in);
json parse_file(const std::string& path);

Instance load_instance(std::istream& in);
Instance load_instance_file(const std::string& path);
PdmInstance load_pdm_file(const std::string& path);

}  // namespace extfair::io

#endif  // EXTFAIR_IO_HPP
