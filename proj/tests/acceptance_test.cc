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

// Acceptance suite. Prints one line per criterion and exits nonzero if any
// criterion fails or exceeds its time limit.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "testing/example_tables.h"
#include "testing/fixtures.h"
#include "testing/oracles.h"
#include "tokgraph/cuts.h"
#include "tokgraph/graph.h"
#include "tokgraph/group_algebra.h"
#include "tokgraph/oracle.h"
#include "tokgraph/report.h"
#include "tokgraph/symmetry.h"
#include "tokgraph/token_graph.h"
#include "tokgraph/verify.h"

namespace tokgraph {
namespace {

using testing::cfg;
using testing::load_fixture;
using testing::tuple_by_members;

struct Outcome {
  bool ok = true;
  std::string detail;

  void check(bool condition, const std::string& what) {
    if (condition) return;
    if (ok) detail = what;
    ok = false;
  }
};

const char* const kFixtures[] = {"figure1", "c4",       "k23",      "k24",
                                 "p3",      "planted6", "rigid_cut"};

std::vector<AlphaSet> all_alphas(const CutFamily& family, int cut) {
  const std::size_t size = family.tuples(cut).size();
  std::vector<AlphaSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << size); ++mask) {
    AlphaSet alpha = AlphaSet::Empty(family, cut);
    for (std::size_t j = 0; j < size; ++j) alpha.members[j] = (mask >> j) & 1u;
    out.push_back(alpha);
  }
  return out;
}

std::vector<BetaSet> all_betas(const CutFamily& family) {
  const std::size_t size = family.universe_size();
  std::vector<BetaSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << size); ++mask) {
    BetaSet beta = BetaSet::Empty(family);
    for (std::size_t j = 0; j < size; ++j) beta.members[j] = (mask >> j) & 1u;
    out.push_back(beta);
  }
  return out;
}

Outcome match_table(const Permutation& p, const Graph& g, const TokenGraph& tg,
                    const std::array<testing::MapRow, 15>& table) {
  Outcome out;
  int matched = 0;
  for (const auto& row : table) {
    const TokenConfig from = cfg(g, {row.from[0], row.from[1]});
    const TokenConfig to = cfg(g, {row.to[0], row.to[1]});
    const TokenConfig got = tg.config(p(tg.index_of(from)));
    out.check(got == to, "row " + tg.label(from) + " gave " + tg.label(got));
    matched += got == to;
  }
  std::set<TokenConfig> rows;
  for (const auto& row : table) rows.insert(cfg(g, {row.from[0], row.from[1]}));
  out.check(rows.size() == tg.num_vertices(), "table does not cover every configuration");
  if (out.ok) out.detail = std::to_string(matched) + "/15 rows";
  return out;
}

Outcome example1() {
  const Graph g = load_fixture("figure1");
  const TokenGraph tg = build_token_graph(g, 2);
  const CutFamily family = find_cuts(g, 2);
  const std::size_t t = tuple_by_members(g, family, 0, {{"w", 0}, {"z", 1}});
  const Permutation p =
      phi(family, BetaSet::Singleton(family, t).restrict_to(family, 0), tg);
  return match_table(p, g, tg, testing::kPhiTable);
}

Outcome example2() {
  const Graph g = load_fixture("figure1");
  const TokenGraph tg = build_token_graph(g, 2);
  const CutFamily family = find_cuts(g, 2);
  BetaSet beta = BetaSet::Empty(family);
  beta.members.set(tuple_by_members(g, family, 0, {{"w", 0}, {"z", 1}}));
  beta.members.set(tuple_by_members(g, family, 1, {{"z", 0}, {"w", 1}}));
  return match_table(psi(beta, family, tg), g, tg, testing::kPsiTable);
}

Outcome phi_automorphisms() {
  Outcome out;
  std::size_t checked = 0;
  for (const char* name : kFixtures) {
    const Graph g = load_fixture(name);
    for (int k = 1; k < g.num_vertices(); ++k) {
      const TokenGraph tg = build_token_graph(g, k);
      const CutFamily family = find_cuts(g, k);
      for (int cut = 0; cut < family.size(); ++cut) {
        for (const AlphaSet& alpha : all_alphas(family, cut)) {
          out.check(is_automorphism(phi(family, alpha, tg), tg),
                    std::string(name) + " k=" + std::to_string(k));
          ++checked;
        }
      }
    }
  }
  if (out.ok) out.detail = std::to_string(checked) + " flips over all fixtures and k";
  return out;
}

Outcome phi_induced() {
  Outcome out;
  const Graph g = load_fixture("figure1");
  const TokenGraph tg = build_token_graph(g, 2);
  const CutFamily family = find_cuts(g, 2);
  const PermGroup aut = brute_force_aut(g);
  out.check(aut.order() == 8, "|Aut(G)| = " + std::to_string(aut.order()));
  int checked = 0;
  for (int cut = 0; cut < family.size(); ++cut) {
    for (const AlphaSet& alpha : all_alphas(family, cut)) {
      const bool trivial = alpha.members.none() || alpha.members.all();
      const InducedWitness w = classify_induced(phi(family, alpha, tg), tg, aut.elements());
      out.check((w.kind != InducedKind::kNonInduced) == trivial,
                "cut " + std::to_string(cut + 1) + " disagrees");
      ++checked;
    }
  }
  if (out.ok) out.detail = std::to_string(checked) + " flips, |Aut(G)| = 8";
  return out;
}

Outcome structural_equations() {
  Outcome out;
  const Graph g = load_fixture("figure1");
  std::size_t checked = 0;
  for (int k = 1; k < g.num_vertices(); ++k) {
    const TokenGraph tg = build_token_graph(g, k);
    const CutFamily family = find_cuts(g, k);
    const std::string at = " at k=" + std::to_string(k);
    for (int cut = 0; cut < family.size(); ++cut) {
      const auto alphas = all_alphas(family, cut);
      for (const AlphaSet& a : alphas) {
        const Permutation pa = phi(family, a, tg);
        out.check((pa * pa).is_identity(), "involution" + at);
        for (const AlphaSet& b : alphas) {
          out.check(pa * phi(family, b, tg) == phi(family, a ^ b, tg),
                    "symmetric difference law" + at);
          ++checked;
        }
        for (int other = cut + 1; other < family.size(); ++other) {
          for (const AlphaSet& b : all_alphas(family, other)) {
            const Permutation pb = phi(family, b, tg);
            out.check(pa * pb == pb * pa, "cross-cut commutation" + at);
            ++checked;
          }
        }
      }
    }
    for (const BetaSet& beta : all_betas(family)) {
      out.check(psi(beta, family, tg) ==
                    psi(beta, family, tg, CompositionOrder::kReverse),
                "composite flip depends on cut order" + at);
    }
    for (TokenConfig a : tg.configs()) {
      for (int i = 0; i < family.size(); ++i) {
        for (int j = i + 1; j < family.size(); ++j) {
          const Cut& s = family.cut(i);
          const Cut& t = family.cut(j);
          if (TokenConfig(a.bits() & s.mask().bits()).size() != 1) continue;
          if (TokenConfig(a.bits() & t.mask().bits()).size() != 1) continue;
          out.check(token_move(token_move(a, s), t) == token_move(token_move(a, t), s),
                    "double move" + at);
          ++checked;
        }
      }
    }
  }
  if (out.ok) out.detail = std::to_string(checked) + " identities, k = 1..5";
  return out;
}

Outcome group_orders() {
  Outcome out;
  const Graph g = load_fixture("figure1");
  const TokenGraph tg = build_token_graph(g, 2);
  const CutFamily family = find_cuts(g, 2);
  const auto flips = singleton_flips(family, tg);
  std::ostringstream detail;
  for (int cut = 0; cut < family.size(); ++cut) {
    std::vector<Permutation> gens;
    for (std::size_t j = 0; j < family.tuples(cut).size(); ++j) {
      gens.push_back(flips[family.global_index(cut, j)]);
    }
    const std::size_t order = closure(gens, tg.num_vertices()).order();
    const std::size_t expected = std::size_t{1} << family.tuples(cut).size();
    out.check(order == expected, "cut " + std::to_string(cut + 1) + " order " +
                                     std::to_string(order));
    detail << "|N_S" << cut + 1 << "| = " << order << ", ";
  }
  const std::size_t n_order = closure(flips, tg.num_vertices()).order();
  out.check(family.universe_size() == 4, "tuple universe is not 4");
  out.check(n_order == 16, "|N| = " + std::to_string(n_order));
  detail << "|N| = " << n_order;
  if (out.ok) out.detail = detail.str();
  return out;
}

Outcome theorem_witnesses() {
  Outcome out;
  const Graph g = load_fixture("figure1");
  const TokenGraph tg = build_token_graph(g, 2);
  const CutFamily family = find_cuts(g, 2);
  const PermGroup aut = brute_force_aut(g);
  const TheoremCheck check = verify_theorem(g, tg, family, aut);
  out.check(!check.capped, check.cap_detail);
  out.check(aut.order() == 8, "|Aut(G)| != 8");
  out.check(check.stabilizer_order == 2, "|S| != 2");
  out.check(check.closure_order == 32 && check.predicted == 32,
            "closure " + std::to_string(check.closure_order));
  out.check(check.flips_normal.holds, check.flips_normal.witness);
  out.check(check.trivial_intersection.holds, check.trivial_intersection.witness);
  out.check(check.contains_induced.holds, check.contains_induced.witness);
  out.check(check.unique_factorization.holds, check.unique_factorization.witness);
  out.check(check.decomposition_holds.holds, check.decomposition_holds.witness);
  int decomposed = 0;
  for (const Permutation& f : aut.elements()) {
    const Decomposition d = decompose_induced(f, g, family);
    decomposed += preserves_cut_orientation(d.corrected, family) &&
                  induced(f, tg) == psi(d.beta, family, tg) * induced(d.corrected, tg);
  }
  out.check(decomposed == 8, std::to_string(decomposed) + "/8 decompositions");
  if (out.ok) out.detail = "|G| = 32 = 2^4 * 2, 8/8 decompositions";
  return out;
}

Outcome bipartite_cross_check() {
  Outcome out;
  const Graph k23 = load_fixture("k23");
  const TokenGraph tg = build_token_graph(k23, 2);
  const CutFamily family = find_cuts(k23, 2);
  const PermGroup aut = brute_force_aut(k23);
  const TheoremCheck check = verify_theorem(k23, tg, family, aut);
  std::vector<Permutation> gens = singleton_flips(family, tg);
  const PermGroup stabilizer = stabilizer_S(aut, family);
  for (const Permutation& f : stabilizer.generators()) gens.push_back(induced(f, tg));
  const PermGroup generated = closure(gens, tg.num_vertices());
  const PermGroup full = brute_force_aut(tg.as_graph());
  const std::size_t closed_form = (std::size_t{1} << binomial(3, 1)) * 6;
  out.check(check.all_hold(), "theorem check failed on K_{2,3}");
  out.check(same_group(generated, full), "closure differs from Aut(F_2(K_{2,3}))");
  out.check(full.order() == closed_form, "oracle order " + std::to_string(full.order()));

  const auto report = build_report(load_fixture("k24"), 3);
  out.check(report["half"] == true, "K_{2,4}, k=3 is not the complement branch");
  out.check(!report["predicted"].is_null() && !report["oracle"].is_null(),
            "K_{2,4} report lacks predicted or oracle order");
  if (out.ok) {
    out.detail = "K_{2,3}: 48 = 2^3 * 3!; K_{2,4} k=3: predicted " +
                 report["predicted"].dump() + ", oracle " + report["oracle"].dump();
  }
  return out;
}

bool in_class(const Graph& g, const CutFamily& family, std::size_t t, TokenConfig a) {
  const Cut& cut = family.cut(family.tuple_ref(t).cut);
  if (a.contains(cut.x) == a.contains(cut.y)) return false;
  Distribution counts(cut.count(), 0);
  for (Vertex v : a.vertices()) {
    if (!cut.contains(v)) ++counts[cut.components.component_id[v]];
  }
  return counts == family.tuple(t);
}

Outcome action_properties() {
  Outcome out;
  std::size_t star = 0;
  std::size_t commutations = 0;
  for (const char* name : kFixtures) {
    const Graph g = load_fixture(name);
    const PermGroup aut = brute_force_aut(g);
    for (int k = 1; k < g.num_vertices(); ++k) {
      const TokenGraph tg = build_token_graph(g, k);
      const CutFamily family = find_cuts(g, k);
      const std::string at = std::string(name) + " k=" + std::to_string(k);
      for (const Permutation& f : aut.elements()) {
        const TupleAction action(f, g, family);
        for (std::size_t t = 0; t < family.universe_size(); ++t) {
          const std::size_t ft = action(t);
          for (TokenConfig a : tg.configs()) {
            TokenConfig fa;
            for (Vertex v : a.vertices()) fa = fa.with(static_cast<Vertex>(f(v)));
            out.check(in_class(g, family, t, a) == in_class(g, family, ft, fa),
                      "(*) fails on " + at);
            ++star;
          }
        }
      }
      if (family.empty()) continue;
      const PermGroup s = stabilizer_S(aut, family);
      for (const Permutation& f : s.elements()) {
        for (std::size_t t = 0; t < family.universe_size(); ++t) {
          const CommutationCheck c =
              verify_commutation(f, BetaSet::Singleton(family, t), tg, family);
          out.check(c.induced_side, "induced commutation on " + at + ": " + c.witness);
          out.check(!c.complement_side || *c.complement_side,
                    "complement commutation on " + at + ": " + c.witness);
          ++commutations;
        }
      }
    }
  }
  const Graph g = load_fixture("planted6");
  const TokenGraph tg = build_token_graph(g, 3);
  const CutFamily family = find_cuts(g, 3);
  out.check(!family.empty(), "n=6, k=3 fixture has no cut");
  std::size_t dagger = 0;
  for (std::size_t t = 0; t < family.universe_size(); ++t) {
    const std::size_t ct = complement_on_tuple(t, family, 6);
    for (TokenConfig a : tg.configs()) {
      out.check(in_class(g, family, t, a) == in_class(g, family, ct, a.complement(6)),
                "(+) fails on planted6");
      ++dagger;
    }
  }
  if (out.ok) {
    out.detail = "(*) " + std::to_string(star) + " triples, (+) " + std::to_string(dagger) +
                 " pairs, commutation " + std::to_string(commutations) + " cases";
  }
  return out;
}

int run_cli(const std::string& args) {
  const std::string command = std::string(TG_BINARY) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome degenerate_cases() {
  Outcome out;
  const VerificationRun c4 = run_verification(load_fixture("c4"), 2);
  bool exempt = false;
  for (const ClaimResult& c : c4.claims) {
    if (c.id == "lemma-2cut-b") exempt = c.status == ClaimStatus::kExempt;
  }
  out.check(exempt, "C4 did not take the exemption path");
  out.check(!c4.any_failed(), "C4 run reports a failure");

  const Graph p3 = load_fixture("p3");
  out.check(find_cuts(p3).empty(), "P3 has cuts");
  const VerificationRun run = run_verification(p3, 1);
  out.check(!run.any_failed(), "P3 run reports a failure");
  out.check(run.count(ClaimStatus::kVacuous) > 0, "P3 run has no vacuous claims");
  const int p3_code = run_cli("verify " + testing::fixture_path("p3") + " -k 1");
  const int c4_code = run_cli("verify " + testing::fixture_path("c4") + " -k 2");
  out.check(p3_code == 0, "P3 exit code " + std::to_string(p3_code));
  out.check(c4_code == 0, "C4 exit code " + std::to_string(c4_code));
  if (out.ok) {
    out.detail = "C4 exempt, P3 " + std::to_string(run.count(ClaimStatus::kVacuous)) +
                 " vacuous claims, exit codes 0";
  }
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace tokgraph

int main() {
  using namespace tokgraph;
  const std::vector<Criterion> criteria = {
      {1, "single flip table", 1, example1},
      {2, "composite flip table", 1, example2},
      {3, "flips are automorphisms", 10, phi_automorphisms},
      {4, "flips induced iff trivial", 5, phi_induced},
      {5, "structural equations", 5, structural_equations},
      {6, "flip group orders", 5, group_orders},
      {7, "group structure witnesses", 30, theorem_witnesses},
      {8, "complete bipartite cross-check", 60, bipartite_cross_check},
      {9, "action properties", 60, action_properties},
      {10, "degenerate inputs", 1, degenerate_cases},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = outcome.ok && in_time;
    failures += !pass;
    char timing[64];
    std::snprintf(timing, sizeof(timing), "%.3fs < %.0fs", seconds, c.limit_seconds);
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "AC" << c.id << " " << c.name << " ("
              << timing << (in_time ? "" : " exceeded") << "): " << outcome.detail << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : "criteria failed: " +
                                                             std::to_string(failures))
            << std::endl;
  return failures == 0 ? 0 : 1;
}
