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

#include "tokgraph/claim.h"

namespace tokgraph {

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::kPass:
      return "pass";
    case ClaimStatus::kFail:
      return "fail";
    case ClaimStatus::kVacuous:
      return "vacuous";
    case ClaimStatus::kExempt:
      return "exempt";
    case ClaimStatus::kSkipped:
      return "skipped";
  }
  return "unknown";
}

}  // namespace tokgraph
