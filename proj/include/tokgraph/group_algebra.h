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

#ifndef TOKGRAPH_GROUP_ALGEBRA_H_
#define TOKGRAPH_GROUP_ALGEBRA_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tokgraph/cuts.h"
#include "tokgraph/graph.h"
#include "tokgraph/perm_group.h"
#include "tokgraph/permutation.h"
#include "tokgraph/symmetry.h"
#include "tokgraph/token_graph.h"

namespace tokgraph {

// Elements of Aut(G) sending every designated x-vertex to a designated
// x-vertex. Throws Error if the filtered set is not closed.
PermGroup stabilizer_S(const PermGroup& aut_g, const CutFamily& family);

struct Decomposition {
  Permutation corrected;        // orientation-preserving f'
  BetaSet beta;                 // union of tuple sets of the flipped cuts
  std::vector<int> flipped;     // cuts i with f(x_i) = y_{f(i)}
};

// Splits f into iota(f) = psi_beta o iota(f'). The flipped cuts are indexed
// by their images, so beta is the union of T_{S_f(i)}. Throws Error if f is
// not an automorphism of g.
Decomposition decompose_induced(const Permutation& f, const Graph& g,
                                const CutFamily& family);

// 2^{|T_G|} * |S|, doubled when k = n/2. Throws Error without cuts and on
// 64-bit overflow.
std::uint64_t predicted_order(int n, int k, const CutFamily& family,
                              std::size_t stabilizer_order);

// Every singleton phi_{S_i,{t}}, one per tuple in global order.
std::vector<Permutation> singleton_flips(const CutFamily& family,
                                         const TokenGraph& tg);

struct Finding {
  bool holds = false;
  std::string witness;  // empty when the statement holds
};

struct TheoremCheck {
  bool vacuous = false;
  bool capped = false;
  std::string cap_detail;

  std::size_t universe_size = 0;
  std::size_t stabilizer_order = 0;
  std::uint64_t predicted = 0;
  std::size_t closure_order = 0;
  std::size_t flip_group_order = 0;

  Finding order_matches;
  Finding flips_normal;
  Finding trivial_intersection;
  Finding contains_induced;
  Finding unique_factorization;
  Finding decomposition_holds;

  bool all_hold() const {
    return order_matches.holds && flips_normal.holds &&
           trivial_intersection.holds && contains_induced.holds &&
           unique_factorization.holds && decomposition_holds.holds;
  }
};

// Materializes the group generated by iota of the orientation-preserving
// automorphisms, all singleton flips and, when k = n/2, the complement, and
// checks its order, normality of the flip group, the trivial intersection,
// containment of iota(Aut(G)), unique factorization and the decomposition of
// every iota(f).
TheoremCheck verify_theorem(const Graph& g, const TokenGraph& tg,
                            const CutFamily& family, const PermGroup& aut_g,
                            std::size_t cap = kDefaultGroupCap);

}  // namespace tokgraph

#endif  // TOKGRAPH_GROUP_ALGEBRA_H_
