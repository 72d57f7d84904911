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

#ifndef TOKGRAPH_TESTING_FIXTURES_H_
#define TOKGRAPH_TESTING_FIXTURES_H_

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>

#include "tokgraph/cuts.h"
#include "tokgraph/graph.h"
#include "tokgraph/token_graph.h"

namespace tokgraph::testing {

std::string fixture_path(std::string_view name);
Graph load_fixture(std::string_view name);

// Tuple of cut `cut` given as (component member label, token count) pairs,
// so expectations do not depend on the component order chosen by the
// library. Components not mentioned get zero tokens.
std::size_t tuple_by_members(
    const Graph& g, const CutFamily& family, int cut,
    std::initializer_list<std::pair<std::string_view, int>> counts);

TokenConfig cfg(const Graph& g, std::initializer_list<std::string_view> labels);

}  // namespace tokgraph::testing

#endif  // TOKGRAPH_TESTING_FIXTURES_H_
