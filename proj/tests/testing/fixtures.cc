// Copyright 2026 The tokgraph Authors.
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

#include "testing/fixtures.h"

namespace tokgraph::testing {

std::string fixture_path(std::string_view name) {
  return std::string(TG_FIXTURE_DIR) + "/" + std::string(name) + ".edges";
}

Graph load_fixture(std::string_view name) { return read_graph_file(fixture_path(name)); }

std::size_t tuple_by_members(
    const Graph& g, const CutFamily& family, int cut,
    std::initializer_list<std::pair<std::string_view, int>> counts) {
  const Cut& c = family.cut(cut);
  Distribution t(c.count(), 0);
  for (auto [label, count] : counts) {
    const auto v = g.find_label(label);
    if (!v) throw Error("unknown label " + std::string(label));
    const int id = c.components.component_id[*v];
    if (id < 0) throw Error(std::string(label) + " lies on the cut");
    t[id] = count;
  }
  auto global = family.find(cut, t);
  if (!global) throw Error("tuple " + describe_tuple(t) + " not in the tuple set");
  return *global;
}

TokenConfig cfg(const Graph& g, std::initializer_list<std::string_view> labels) {
  return config_from_labels(g, labels);
}

}  // namespace tokgraph::testing
