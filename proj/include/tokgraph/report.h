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

#ifndef TOKGRAPH_REPORT_H_
#define TOKGRAPH_REPORT_H_

#include <cstddef>

#include "json.hpp"
#include "tokgraph/graph.h"
#include "tokgraph/perm_group.h"
#include "tokgraph/verify.h"

namespace tokgraph {

inline constexpr int kReportSchema = 1;

struct ReportOptions {
  std::size_t cap = kDefaultGroupCap;
  bool oracle = true;
  // F_k(G) is handed to the oracle only up to this many vertices.
  int oracle_max_vertices = 40;
};

// Summary of the cut structure and the group orders for F_k(g): q(G), cut
// components, tuple counts, |Aut(G)|, |S|, predicted and closure orders and,
// when feasible, the oracle's |Aut(F_k(G))|. Unavailable numbers are null.
nlohmann::ordered_json build_report(const Graph& g, int k,
                                    const ReportOptions& options = {});

nlohmann::ordered_json to_json(const VerificationRun& run, bool with_timing = true);

}  // namespace tokgraph

#endif  // TOKGRAPH_REPORT_H_
