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

#include "extfair/known_instances.hpp"

#include <string>
#include <vector>

namespace extfair::known {

using Tensor = std::vector<std::vector<std::vector<Value>>>;

Instance swap_envy_instance() {
  return Instance(2, {"a", "b", "c"},
                  Tensor{{{3, 1}, {1, 2}, {2, 1}},
                         {{1, 4}, {2, 1}, {3, 2}}});
}

Allocation swap_envy_allocation() { return Allocation({0, 0, 1}); }

Allocation ef1_not_efx_allocation() { return Allocation({1, 0, 0}); }

Instance no_efx_instance() {
  std::vector<std::string> names{"a1", "a2", "a3", "a4", "a5", "a6", "g"};
  Tensor values(3);
  const std::vector<std::vector<Value>> plain{{21, 16, 16}, {16, 21, 16}, {16, 16, 21}};
  const std::vector<std::vector<Value>> special{{17, 16, 16}, {16, 24, 0}, {16, 0, 24}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (int k = 0; k < 6; ++k) values[i].push_back(plain[i]);
    values[i].push_back(special[i]);
  }
  return Instance(3, std::move(names), values);
}

Instance negative_items_instance() {
  return Instance(2, {"a1", "a2"},
                  Tensor{{{-1, 0}, {-1, 0}},
                         {{0, 0}, {0, 0}}});
}

Allocation negative_items_split() { return Allocation({0, 1}); }

Instance single_item_externality_instance() {
  return Instance(3, {"a"},
                  Tensor{{{0, 1, 0}},
                         {{0, 0, 0}},
                         {{0, 0, 0}}});
}

Allocation single_item_to_agent3() { return Allocation({2}); }

}  // namespace extfair::known
