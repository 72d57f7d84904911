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

#include "tokgraph/report.h"

#include "tokgraph/cuts.h"
#include "tokgraph/group_algebra.h"
#include "tokgraph/oracle.h"
#include "tokgraph/token_graph.h"

namespace tokgraph {

nlohmann::ordered_json build_report(const Graph& g, int k,
                                    const ReportOptions& options) {
  using nlohmann::ordered_json;
  const TokenGraph tg = build_token_graph(g, k);
  const CutFamily family = find_cuts(g, k);

  ordered_json out;
  out["schema"] = kReportSchema;
  out["n"] = g.num_vertices();
  out["m"] = g.num_edges();
  out["k"] = k;
  out["half"] = 2 * k == g.num_vertices();
  out["token_vertices"] = tg.num_vertices();
  out["token_edges"] = tg.num_edges();
  out["q"] = family.size();

  ordered_json cuts = ordered_json::array();
  for (int i = 0; i < family.size(); ++i) {
    const Cut& cut = family.cut(i);
    ordered_json c;
    c["x"] = g.label(cut.x);
    c["y"] = g.label(cut.y);
    ordered_json comps = ordered_json::array();
    for (const auto& comp : cut.components.components) {
      ordered_json labels = ordered_json::array();
      for (Vertex v : comp) labels.push_back(g.label(v));
      comps.push_back(labels);
    }
    c["components"] = comps;
    c["component_sizes"] = cut.sizes();
    c["tuple_count"] = family.tuples(i).size();
    cuts.push_back(c);
  }
  out["cuts"] = cuts;
  out["tuple_universe"] = family.universe_size();

  out["aut_g"] = nullptr;
  out["stabilizer"] = nullptr;
  out["predicted"] = nullptr;
  out["closure"] = nullptr;
  out["oracle"] = nullptr;

  std::optional<PermGroup> aut_g;
  try {
    aut_g = brute_force_aut(g, OracleOptions{options.cap, kMaxBaseVertices});
  } catch (const CapExceeded&) {
  }
  if (aut_g) {
    out["aut_g"] = aut_g->order();
    const PermGroup stab = stabilizer_S(*aut_g, family);
    out["stabilizer"] = stab.order();
    if (!family.empty()) {
      try {
        out["predicted"] = predicted_order(g.num_vertices(), k, family, stab.order());
      } catch (const Error&) {
      }
      std::vector<Permutation> gens = singleton_flips(family, tg);
      for (const Permutation& f : stab.generators()) gens.push_back(induced(f, tg));
      if (2 * k == g.num_vertices()) gens.push_back(complement_automorphism(tg));
      try {
        out["closure"] = closure(gens, tg.num_vertices(), options.cap).order();
      } catch (const CapExceeded&) {
      }
    }
  }
  if (options.oracle &&
      tg.num_vertices() <= static_cast<std::size_t>(options.oracle_max_vertices)) {
    try {
      out["oracle"] =
          brute_force_aut(tg.as_graph(),
                          OracleOptions{options.cap, options.oracle_max_vertices})
              .order();
    } catch (const CapExceeded&) {
    }
  }
  return out;
}

nlohmann::ordered_json to_json(const VerificationRun& run, bool with_timing) {
  using nlohmann::ordered_json;
  ordered_json out;
  out["schema"] = kReportSchema;
  out["n"] = run.n;
  out["k"] = run.k;
  ordered_json claims = ordered_json::array();
  for (const ClaimResult& c : run.claims) {
    ordered_json j;
    j["id"] = c.id;
    j["status"] = std::string(to_string(c.status));
    j["detail"] = c.detail;
    if (with_timing) j["millis"] = c.millis;
    claims.push_back(j);
  }
  out["claims"] = claims;
  ordered_json summary;
  for (ClaimStatus s : {ClaimStatus::kPass, ClaimStatus::kFail, ClaimStatus::kVacuous,
                        ClaimStatus::kExempt, ClaimStatus::kSkipped}) {
    summary[std::string(to_string(s))] = run.count(s);
  }
  out["summary"] = summary;
  out["ok"] = !run.any_failed();
  return out;
}

}  // namespace tokgraph
