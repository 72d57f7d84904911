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

#ifndef TOKGRAPH_TUPLE_SYNTAX_H_
#define TOKGRAPH_TUPLE_SYNTAX_H_

#include <string_view>
#include <utility>
#include <vector>

#include "tokgraph/cuts.h"

namespace tokgraph {

// "(0,1)" or "0.1". Throws ParseError.
Distribution parse_tuple(std::string_view text);

// Comma-separated tuples, e.g. "(0,1),(1,0)" or "0.1,1.0".
std::vector<Distribution> parse_tuple_list(std::string_view text);

// Comma-separated "cut:tuple" items with 1-based cut numbers, e.g.
// "1:(0,1),2:(1,0)". Returns 0-based cut indices.
std::vector<std::pair<int, Distribution>> parse_beta_list(std::string_view text);

}  // namespace tokgraph

#endif  // TOKGRAPH_TUPLE_SYNTAX_H_
