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

#ifndef TOKGRAPH_VERIFY_H_
#define TOKGRAPH_VERIFY_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tokgraph/claim.h"
#include "tokgraph/graph.h"
#include "tokgraph/perm_group.h"

namespace tokgraph {

struct VerifyOptions {
  std::size_t cap = kDefaultGroupCap;
  // Subset families up to 2^exhaustive_bits members are swept completely;
  // larger ones fall back to the empty set, the full set and all singletons.
  int exhaustive_bits = 12;
  // Pairwise checks over Aut(G) use at most this many elements per side.
  std::size_t pair_sample = 64;
};

struct VerificationRun {
  int n = 0;
  int k = 0;
  std::vector<ClaimResult> claims;

  bool any_failed() const;
  int count(ClaimStatus status) const;
};

// Claim ids in reporting order. Every id appears exactly once per run.
const std::vector<std::string_view>& claim_registry();

// Runs every registered claim on F_k(g). Throws Error when g is disconnected
// or k is out of range.
VerificationRun run_verification(const Graph& g, int k,
                                 const VerifyOptions& options = {});

}  // namespace tokgraph

#endif  // TOKGRAPH_VERIFY_H_
