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

#ifndef TOKGRAPH_CLAIM_H_
#define TOKGRAPH_CLAIM_H_

#include <string>
#include <string_view>

namespace tokgraph {

enum class ClaimStatus { kPass, kFail, kVacuous, kExempt, kSkipped };

std::string_view to_string(ClaimStatus status);

// Outcome of one checked statement. `detail` carries the witness on failure
// and a short explanation for vacuous, exempt and skipped outcomes.
struct ClaimResult {
  std::string id;
  ClaimStatus status = ClaimStatus::kPass;
  std::string detail;
  double millis = 0.0;

  bool failed() const { return status == ClaimStatus::kFail; }
};

}  // namespace tokgraph

#endif  // TOKGRAPH_CLAIM_H_
