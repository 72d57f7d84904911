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

#ifndef TOKGRAPH_ORACLE_H_
#define TOKGRAPH_ORACLE_H_

#include <cstddef>

#include "tokgraph/graph.h"
#include "tokgraph/perm_group.h"

namespace tokgraph {

struct OracleOptions {
  std::size_t cap = kDefaultGroupCap;
  int max_vertices = 40;
};

// Full automorphism group by backtracking over vertices in ascending order.
// Candidates must match a one-round signature (degree plus the sorted degrees
// of the neighbours) and agree on adjacency with every vertex already placed.
// Throws CapExceeded past options.cap, Error past options.max_vertices.
PermGroup brute_force_aut(const Graph& g, const OracleOptions& options = {});

}  // namespace tokgraph

#endif  // TOKGRAPH_ORACLE_H_
