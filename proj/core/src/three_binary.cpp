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

#include "extfair/three_binary.hpp"

#include <algorithm>
#include <map>

#include "extfair/errors.hpp"

namespace extfair::three_binary {

namespace {

using Cells = std::array<std::array<int, 3>, 3>;

struct Residual {
  const char* rows;
  int variant;
  Cells cells;
};

// Variant numbering within each category follows the usual listing.
const Residual kResidual[] = {
    {"123", 0, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}},
    {"12", 0, {{{1, 0, 0}, {0, 1, 0}, {0, 1, 1}}}},
    {"12", 1, {{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}}},
    {"13", 0, {{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}}},
    {"13", 1, {{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}}},
    {"23", 0, {{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}}},
    {"23", 1, {{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}}},
    {"1", 0, {{{1, 0, 0}, {0, 1, 1}, {0, 1, 1}}}},
    {"1", 1, {{{1, 0, 0}, {0, 1, 1}, {1, 0, 1}}}},
    {"1", 2, {{{1, 0, 0}, {1, 1, 0}, {0, 1, 1}}}},
    {"2", 0, {{{1, 0, 1}, {0, 1, 0}, {0, 1, 1}}}},
    {"2", 1, {{{1, 0, 1}, {0, 1, 0}, {1, 0, 1}}}},
    {"2", 2, {{{1, 1, 0}, {0, 1, 0}, {1, 0, 1}}}},
    {"3", 0, {{{1, 0, 1}, {1, 1, 0}, {0, 0, 1}}}},
    {"3", 1, {{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}}},
    {"3", 2, {{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}}},
    {"0", 0, {{{1, 0, 1}, {1, 1, 0}, {0, 1, 1}}}},
    {"0", 1, {{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}}},
};

bool two_zeros(const TypeMatrix& m, AgentId row) {
  return (m.at(row, 0) + m.at(row, 1) + m.at(row, 2)) == 1 && m.at(row, row) == 1;
}

/// Row `row` is exactly the unit vector e_row: the agent only values owning
/// the item. Used by the tuple rule.
bool unit_row(const TypeMatrix& m, AgentId row) {
  for (AgentId j = 0; j < kAgents; ++j) {
    if (m.at(row, j) != (j == row ? 1 : 0)) return false;
  }
  return true;
}

std::optional<AgentId> all_ones_column(const TypeMatrix& m) {
  for (AgentId j = 0; j < kAgents; ++j) {
    if (m.at(0, j) == 1 && m.at(1, j) == 1 && m.at(2, j) == 1) return j;
  }
  return std::nullopt;
}

std::optional<AgentId> zero_diagonal(const TypeMatrix& m) {
  for (AgentId i = 0; i < kAgents; ++i) {
    if (m.at(i, i) == 0) return i;
  }
  return std::nullopt;
}

std::optional<AgentId> all_ones_row(const TypeMatrix& m) {
  for (AgentId i = 0; i < kAgents; ++i) {
    if (m.at(i, 0) == 1 && m.at(i, 1) == 1 && m.at(i, 2) == 1) return i;
  }
  return std::nullopt;
}

bool assignment_envy_free(std::initializer_list<std::pair<const TypeMatrix*, AgentId>> placed) {
  Margins m{};
  for (const auto& [matrix, owner] : placed) {
    for (AgentId q = 0; q < kAgents; ++q) {
      if (q == owner) continue;
      m[owner][q] += matrix->delta(owner, q);
      m[q][owner] -= matrix->delta(q, owner);
    }
  }
  return envy_free(m);
}

struct PairMove {
  std::size_t first;  // positions in the remaining list
  std::size_t second;
  AgentId first_owner;
  AgentId second_owner;
};

std::optional<PairMove> find_envy_free_pair(std::span<const TypeMatrix* const> items) {
  for (std::size_t x = 0; x < items.size(); ++x) {
    for (std::size_t y = x + 1; y < items.size(); ++y) {
      for (AgentId i = 0; i < kAgents; ++i) {
        for (AgentId j = 0; j < kAgents; ++j) {
          if (i == j) continue;
          if (assignment_envy_free({{items[x], i}, {items[y], j}})) return PairMove{x, y, i, j};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> find_tuple(std::span<const TypeMatrix* const> items) {
  for (std::size_t a = 0; a < items.size(); ++a) {
    if (!unit_row(*items[a], 0)) continue;
    for (std::size_t b = 0; b < items.size(); ++b) {
      if (b == a || !unit_row(*items[b], 1)) continue;
      for (std::size_t c = 0; c < items.size(); ++c) {
        if (c == a || c == b || !unit_row(*items[c], 2)) continue;
        return std::array<std::size_t, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

/// First group of >= 3 items of one type, by first appearance. Returns the
/// positions of the largest multiple of 3 of them.
std::vector<std::size_t> find_same_type_triples(std::span<const TypeMatrix* const> items) {
  std::map<std::uint16_t, std::vector<std::size_t>> by_type;
  std::vector<std::uint16_t> first_seen;
  for (std::size_t x = 0; x < items.size(); ++x) {
    auto& group = by_type[items[x]->code()];
    if (group.empty()) first_seen.push_back(items[x]->code());
    group.push_back(x);
  }
  for (std::uint16_t code : first_seen) {
    auto& group = by_type[code];
    if (group.size() >= 3) {
      group.resize(group.size() - group.size() % 3);
      return group;
    }
  }
  return {};
}

}  // namespace

TypeMatrix::TypeMatrix(const Cells& cells) : cells_(cells) {
  for (AgentId i = 0; i < kAgents; ++i) {
    for (AgentId j = 0; j < kAgents; ++j) {
      if (cells[i][j] != 0 && cells[i][j] != 1) {
        throw UnsupportedInstance("type matrix entries must be 0 or 1");
      }
      if (cells[i][j] > cells[i][i]) {
        throw UnsupportedInstance("no-chore violated: agent " + std::to_string(i + 1) +
                                  " prefers agent " + std::to_string(j + 1) + " to own the item");
      }
    }
  }
}

std::uint16_t TypeMatrix::code() const {
  std::uint16_t out = 0;
  for (AgentId i = 0; i < kAgents; ++i) {
    for (AgentId j = 0; j < kAgents; ++j) out = static_cast<std::uint16_t>((out << 1) | cells_[i][j]);
  }
  return out;
}

std::string TypeCategory::label() const {
  std::string out = "x_";
  if (rows == 0) out += "0";
  for (AgentId i = 0; i < kAgents; ++i) {
    if (rows & (1u << i)) out += static_cast<char>('1' + i);
  }
  if (variant) out += "^" + std::to_string(*variant);
  return out;
}

void validate(const Instance& inst) {
  if (inst.agents() != kAgents) {
    throw UnsupportedInstance("three-agent solver needs exactly 3 agents, instance has " +
                              std::to_string(inst.agents()));
  }
  if (!inst.is_binary()) throw UnsupportedInstance("three-agent solver needs binary values");
  if (!inst.is_no_chore()) throw UnsupportedInstance("three-agent solver needs the no-chore condition");
}

TypeMatrix type_matrix(const Instance& inst, ItemId item) {
  if (inst.agents() != kAgents) throw UnsupportedInstance("type matrices need exactly 3 agents");
  Cells cells{};
  for (AgentId i = 0; i < kAgents; ++i) {
    for (AgentId j = 0; j < kAgents; ++j) {
      const Value& v = inst.value(i, item, j);
      if (v != Value(0) && v != Value(1)) {
        throw UnsupportedInstance("item '" + inst.items()[item] + "' has a non-binary value");
      }
      cells[i][j] = static_cast<int>(v.numerator());
    }
  }
  return TypeMatrix(cells);
}

TypeCategory classify(const TypeMatrix& matrix) {
  TypeCategory category;
  for (AgentId i = 0; i < kAgents; ++i) {
    if (two_zeros(matrix, i)) category.rows |= static_cast<std::uint8_t>(1u << i);
  }
  for (const Residual& r : kResidual) {
    if (TypeMatrix(r.cells) == matrix) category.variant = r.variant;
  }
  return category;
}

const std::vector<TypeMatrix>& residual_types() {
  static const std::vector<TypeMatrix> types = [] {
    std::vector<TypeMatrix> out;
    for (const Residual& r : kResidual) out.emplace_back(r.cells);
    return out;
  }();
  return types;
}

Margins margins(std::span<const TypeMatrix> items, std::span<const std::optional<AgentId>> owners) {
  Margins m{};
  for (std::size_t a = 0; a < items.size(); ++a) {
    if (!owners[a]) continue;
    const AgentId owner = *owners[a];
    for (AgentId q = 0; q < kAgents; ++q) {
      if (q == owner) continue;
      m[owner][q] += items[a].delta(owner, q);
      m[q][owner] -= items[a].delta(q, owner);
    }
  }
  return m;
}

bool envy_free(const Margins& m) {
  for (AgentId p = 0; p < kAgents; ++p) {
    for (AgentId q = 0; q < kAgents; ++q) {
      if (p != q && m[p][q] < 0) return false;
    }
  }
  return true;
}

bool ef1(const Margins& m) {
  for (AgentId p = 0; p < kAgents; ++p) {
    for (AgentId q = 0; q < kAgents; ++q) {
      if (p != q && m[p][q] < -1) return false;
    }
  }
  return true;
}

bool ef1_no_mutual_envy(const Margins& m) {
  if (!ef1(m)) return false;
  for (AgentId p = 0; p < kAgents; ++p) {
    for (AgentId q = p + 1; q < kAgents; ++q) {
      if (m[p][q] < 0 && m[q][p] < 0) return false;
    }
  }
  return true;
}

std::string rule_name(Rule rule) { return "R" + std::to_string(static_cast<int>(rule)); }

ReductionResult apply_reductions(const Instance& inst) {
  validate(inst);
  const std::size_t m = inst.item_count();
  std::vector<TypeMatrix> matrices;
  matrices.reserve(m);
  for (ItemId a = 0; a < m; ++a) matrices.push_back(type_matrix(inst, a));

  ReductionResult result;
  result.owners.assign(m, std::nullopt);
  std::vector<ItemId> remaining(m);
  for (ItemId a = 0; a < m; ++a) remaining[a] = a;
  std::array<std::optional<ItemId>, kAgents> pending;  // unpaired pool item per indifferent agent

  auto assign = [&](Rule rule, std::vector<ItemId> items, std::vector<AgentId> owners,
                    std::optional<AgentId> pool = std::nullopt) {
    for (std::size_t t = 0; t < items.size(); ++t) result.owners[items[t]] = owners[t];
    result.trace.steps.push_back(TraceStep{rule, std::move(items), std::move(owners), pool});
  };

  // Agent `idle` does not care who owns `a`; give it to one of the others
  // if that creates no envy, otherwise pair it with an earlier item of the
  // same kind so the two cancel out.
  auto route = [&](Rule rule, ItemId a, AgentId idle) {
    const AgentId j = idle == 0 ? 1 : 0;
    const AgentId k = idle == 2 ? 1 : 2;
    const TypeMatrix& t = matrices[a];
    if (t.delta(k, j) == 0) {
      assign(rule, {a}, {j}, idle);
    } else if (t.delta(j, k) == 0) {
      assign(rule, {a}, {k}, idle);
    } else if (pending[idle]) {
      assign(rule, {*pending[idle], a}, {j, k}, idle);
      pending[idle].reset();
    } else {
      pending[idle] = a;
      result.trace.steps.push_back(TraceStep{rule, {a}, {}, idle});
    }
  };

  auto take = [&](const std::vector<std::size_t>& positions) {
    std::vector<ItemId> items;
    for (std::size_t p : positions) items.push_back(remaining[p]);
    std::vector<std::size_t> sorted = positions;
    std::sort(sorted.rbegin(), sorted.rend());
    for (std::size_t p : sorted) remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(p));
    return items;
  };

  bool changed = true;
  while (changed) {
    changed = false;

    std::vector<ItemId> kept;
    for (ItemId a : remaining) {
      const TypeMatrix& t = matrices[a];
      if (auto column = all_ones_column(t)) {
        assign(Rule::ColumnOfOnes, {a}, {*column});
        changed = true;
      } else if (auto idle = zero_diagonal(t)) {
        route(Rule::ZeroDiagonal, a, *idle);
        changed = true;
      } else if (auto row = all_ones_row(t)) {
        route(Rule::RowOfOnes, a, *row);
        changed = true;
      } else {
        kept.push_back(a);
      }
    }
    remaining = std::move(kept);

    std::vector<const TypeMatrix*> view;
    auto refresh = [&] {
      view.clear();
      for (ItemId a : remaining) view.push_back(&matrices[a]);
    };

    refresh();
    if (auto positions = find_same_type_triples(view); !positions.empty()) {
      std::vector<ItemId> items = take(positions);
      std::vector<AgentId> owners;
      for (std::size_t t = 0; t < items.size(); ++t) owners.push_back(t % kAgents);
      assign(Rule::SameTypeTriples, std::move(items), std::move(owners));
      changed = true;
      continue;
    }

    if (auto tuple = find_tuple(view)) {
      std::vector<ItemId> items = take({(*tuple)[0], (*tuple)[1], (*tuple)[2]});
      assign(Rule::Tuple, std::move(items), {0, 1, 2});
      changed = true;
      continue;
    }

    if (auto pair = find_envy_free_pair(view)) {
      std::vector<ItemId> items = take({pair->first, pair->second});
      assign(Rule::EnvyFreePair, std::move(items), {pair->first_owner, pair->second_owner});
      changed = true;
      continue;
    }
  }

  result.kernel = remaining;
  for (AgentId i = 0; i < kAgents; ++i) {
    if (pending[i]) result.leftovers.push_back(Leftover{*pending[i], i});
  }
  result.trace.kernel = result.kernel;
  result.trace.leftovers = result.leftovers;
  return result;
}

std::vector<AgentId> solve_kernel(std::span<const TypeMatrix> items) {
  const std::size_t r = items.size();
  if (r > kMaxKernel) {
    throw SolverError("kernel has " + std::to_string(r) + " items, more than " +
                      std::to_string(kMaxKernel));
  }
  std::vector<std::optional<AgentId>> owners(r, AgentId{0});
  while (true) {
    if (ef1_no_mutual_envy(margins(items, owners))) {
      std::vector<AgentId> out;
      out.reserve(r);
      for (const auto& o : owners) out.push_back(*o);
      return out;
    }
    std::size_t pos = r;
    while (pos > 0) {
      --pos;
      if (++*owners[pos] < kAgents) break;
      owners[pos] = 0;
      if (pos == 0) throw SolverError("no EF1 kernel allocation without mutual envy exists");
    }
    if (r == 0) throw SolverError("no EF1 kernel allocation without mutual envy exists");
  }
}

Allocation solve_kernel(const Instance& kernel) {
  validate(kernel);
  std::vector<TypeMatrix> matrices;
  for (ItemId a = 0; a < kernel.item_count(); ++a) matrices.push_back(type_matrix(kernel, a));
  return Allocation(solve_kernel(matrices));
}

Allocation reinsert_leftovers(const Instance& inst, std::vector<std::optional<AgentId>> owners,
                              const std::vector<Leftover>& leftovers) {
  std::vector<TypeMatrix> matrices;
  matrices.reserve(inst.item_count());
  for (ItemId a = 0; a < inst.item_count(); ++a) matrices.push_back(type_matrix(inst, a));

  auto candidates = [](AgentId idle) {
    return std::array<AgentId, 2>{idle == 0 ? AgentId{1} : AgentId{0}, idle == 2 ? AgentId{1} : AgentId{2}};
  };

  std::vector<std::optional<AgentId>> greedy = owners;
  for (const Leftover& l : leftovers) {
    const auto [j, k] = candidates(l.indifferent);
    const Margins m = margins(matrices, greedy);
    greedy[l.item] = m[k][j] < 0 && m[j][k] >= 0 ? k : j;
  }
  if (ef1(margins(matrices, greedy))) {
    std::vector<AgentId> out;
    for (const auto& o : greedy) out.push_back(*o);
    return Allocation(std::move(out));
  }

  for (std::uint32_t mask = 0; mask < (1u << leftovers.size()); ++mask) {
    for (std::size_t t = 0; t < leftovers.size(); ++t) {
      owners[leftovers[t].item] = candidates(leftovers[t].indifferent)[(mask >> t) & 1u];
    }
    if (ef1(margins(matrices, owners))) {
      std::vector<AgentId> out;
      for (const auto& o : owners) out.push_back(*o);
      return Allocation(std::move(out));
    }
  }
  throw SolverError("no EF1 placement of the set-aside items exists");
}

Solution solve_traced(const Instance& inst) {
  ReductionResult reduced = apply_reductions(inst);
  std::vector<TypeMatrix> kernel;
  for (ItemId a : reduced.kernel) kernel.push_back(type_matrix(inst, a));
  const std::vector<AgentId> kernel_owners = solve_kernel(kernel);
  for (std::size_t t = 0; t < reduced.kernel.size(); ++t) reduced.owners[reduced.kernel[t]] = kernel_owners[t];
  return Solution{reinsert_leftovers(inst, std::move(reduced.owners), reduced.leftovers),
                  std::move(reduced.trace)};
}

Allocation solve_three_binary(const Instance& inst) { return solve_traced(inst).allocation; }

bool is_fixpoint(std::span<const TypeMatrix> items) {
  std::vector<const TypeMatrix*> view;
  for (const TypeMatrix& t : items) view.push_back(&t);
  return find_same_type_triples(view).empty() && !find_tuple(view) && !find_envy_free_pair(view);
}

std::vector<std::vector<TypeMatrix>> kernel_configurations(int max_multiplicity) {
  const auto& types = residual_types();
  const std::size_t count = types.size();
  // compatible[t][u]: items of types t and u can sit in one kernel, i.e. no
  // envy-free pair assignment exists.
  std::vector<std::vector<bool>> compatible(count, std::vector<bool>(count));
  for (std::size_t t = 0; t < count; ++t) {
    for (std::size_t u = 0; u < count; ++u) {
      const TypeMatrix* pair[] = {&types[t], &types[u]};
      compatible[t][u] = !find_envy_free_pair(pair);
    }
  }

  std::vector<std::vector<TypeMatrix>> out;
  std::vector<int> multiplicity(count, 0);
  auto recurse = [&](auto&& self, std::size_t t) -> void {
    if (t == count) {
      std::vector<TypeMatrix> items;
      for (std::size_t u = 0; u < count; ++u) {
        for (int c = 0; c < multiplicity[u]; ++c) items.push_back(types[u]);
      }
      if (is_fixpoint(items)) out.push_back(std::move(items));
      return;
    }
    self(self, t + 1);
    for (std::size_t u = 0; u < t; ++u) {
      if (multiplicity[u] > 0 && !compatible[t][u]) return;
    }
    for (int c = 1; c <= max_multiplicity; ++c) {
      if (c >= 2 && !compatible[t][t]) break;
      if (c >= 3) break;  // three of a type always reduce
      multiplicity[t] = c;
      self(self, t + 1);
    }
    multiplicity[t] = 0;
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace extfair::three_binary
