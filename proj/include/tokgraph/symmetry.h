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

#ifndef TOKGRAPH_SYMMETRY_H_
#define TOKGRAPH_SYMMETRY_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "tokgraph/cuts.h"
#include "tokgraph/graph.h"
#include "tokgraph/permutation.h"
#include "tokgraph/token_graph.h"

namespace tokgraph {

// A subset of the tuple set of one cut, as a bitset over tuple_set order.
struct AlphaSet {
  int cut = 0;
  boost::dynamic_bitset<> members;

  static AlphaSet Empty(const CutFamily& family, int cut);
  static AlphaSet Full(const CutFamily& family, int cut);
  // Throws Error if some tuple is not in the cut's tuple set.
  static AlphaSet Of(const CutFamily& family, int cut,
                     std::span<const Distribution> tuples);

  AlphaSet operator^(const AlphaSet& other) const;
  bool operator==(const AlphaSet& other) const = default;
};

// A subset of the disjoint union of all tuple sets, over the global index.
struct BetaSet {
  boost::dynamic_bitset<> members;

  static BetaSet Empty(const CutFamily& family);
  static BetaSet Full(const CutFamily& family);
  static BetaSet Singleton(const CutFamily& family, std::size_t global);
  static BetaSet FromAlpha(const CutFamily& family, const AlphaSet& alpha);

  AlphaSet restrict_to(const CutFamily& family, int cut) const;
  BetaSet operator^(const BetaSet& other) const;
  BetaSet operator|(const BetaSet& other) const;
  bool operator==(const BetaSet& other) const = default;
};

std::string describe_beta(const CutFamily& family, const BetaSet& beta);

// Vertex permutation of G written in cycle notation over labels, e.g.
// "(x1 x2)(y1 y2)". Throws Error on unknown labels or repeated points.
Permutation permutation_from_cycles(const Graph& g, std::string_view cycles);

bool is_graph_automorphism(const Permutation& f, const Graph& g);

// Setwise image A -> f(A). Throws Error if f is not an automorphism of the
// base graph.
Permutation induced(const Permutation& f, const TokenGraph& tg);

// Flips the cut token exactly on the classes selected by `alpha`.
TokenConfig apply_phi(const CutFamily& family, const AlphaSet& alpha,
                      TokenConfig a);
Permutation phi(const CutFamily& family, const AlphaSet& alpha,
                const TokenGraph& tg);

// kForward composes phi_{S_1} o ... o phi_{S_q} (the last cut acts first);
// kReverse composes the factors the other way round.
enum class CompositionOrder { kForward, kReverse };

Permutation psi(const BetaSet& beta, const CutFamily& family,
                const TokenGraph& tg,
                CompositionOrder order = CompositionOrder::kForward);

// Edge set mapped onto itself, checked through p and through its inverse.
bool is_automorphism(const Permutation& p, const TokenGraph& tg);

enum class InducedKind { kIota, kComplementIota, kNonInduced };

struct InducedWitness {
  InducedKind kind = InducedKind::kNonInduced;
  std::optional<Permutation> f;  // set unless kNonInduced
};

// Searches aut_g for f with p == iota(f) or, when k = n/2, p == c o iota(f).
InducedWitness classify_induced(const Permutation& p, const TokenGraph& tg,
                                std::span<const Permutation> aut_g);

// How an automorphism of G moves the cuts and their components.
class TupleAction {
 public:
  // Throws Error if f is not an automorphism of g.
  TupleAction(const Permutation& f, const Graph& g, const CutFamily& family);

  int cut_image(int cut) const { return cut_image_[cut]; }
  // Component j of G - S_i goes to component_image(i)[j] of G - S_{f(i)}.
  const std::vector<int>& component_image(int cut) const {
    return component_image_[cut];
  }

  std::size_t operator()(std::size_t tuple) const;
  BetaSet operator()(const BetaSet& beta) const;

 private:
  const CutFamily* family_;
  std::vector<int> cut_image_;
  std::vector<std::vector<int>> component_image_;
};

// The tuple f t: counts travel with the components, t'(j') = t(j) whenever
// f maps component j onto component j'.
std::size_t act_on_tuple(const Permutation& f, const Graph& g,
                         std::size_t tuple, const CutFamily& family);

// (n_1 - k_1, ..., n_r - k_r) on the same cut. Throws Error unless k = n/2.
std::size_t complement_on_tuple(std::size_t tuple, const CutFamily& family,
                                int n);
BetaSet complement_on_beta(const BetaSet& beta, const CutFamily& family, int n);

// f(x_i) = x_{f(i)} for every cut (so also f(y_i) = y_{f(i)}).
bool preserves_cut_orientation(const Permutation& f, const CutFamily& family);

struct CommutationCheck {
  bool induced_side = false;               // iota(f) psi_b == psi_{fb} iota(f)
  std::optional<bool> complement_side;     // c psi_b == psi_{cb} c, k = n/2
  std::string witness;
};

// Throws Error if f is not an orientation-preserving automorphism of G.
CommutationCheck verify_commutation(const Permutation& f, const BetaSet& beta,
                                    const TokenGraph& tg,
                                    const CutFamily& family);

}  // namespace tokgraph

#endif  // TOKGRAPH_SYMMETRY_H_
