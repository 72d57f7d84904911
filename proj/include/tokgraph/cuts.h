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

#ifndef TOKGRAPH_CUTS_H_
#define TOKGRAPH_CUTS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tokgraph/claim.h"
#include "tokgraph/graph.h"
#include "tokgraph/token_graph.h"

namespace tokgraph {

// Token counts per component of G minus a cut, in the cut's component order.
using Distribution = std::vector<int>;

// A 2-cut {x, y} whose vertices have the same neighbours outside the pair.
struct Cut {
  Vertex x = 0;  // x < y
  Vertex y = 0;
  // Components of G - {x, y} in G's indices; x and y carry id -1.
  ComponentPartition components;

  int count() const { return components.count(); }
  std::vector<int> sizes() const;
  bool contains(Vertex v) const { return v == x || v == y; }
  TokenConfig mask() const { return TokenConfig().with(x).with(y); }
};

// Every tuple (k_1, ..., k_c) with 0 <= k_i <= n_i summing to k - 1, in
// lexicographic order. Empty when k - 1 exceeds the component total.
std::vector<Distribution> tuple_set(const Cut& cut, int k);

// Position of a tuple inside the disjoint union of all tuple sets.
struct TupleRef {
  int cut = 0;
  std::size_t local = 0;
};

// All 2-cuts with the same neighbours of a connected graph, ordered
// lexicographically by (x, y), together with the tuple universe for k tokens.
class CutFamily {
 public:
  CutFamily() = default;
  CutFamily(std::vector<Cut> cuts, int k);

  int size() const { return static_cast<int>(cuts_.size()); }
  bool empty() const { return cuts_.empty(); }
  const std::vector<Cut>& cuts() const { return cuts_; }
  const Cut& cut(int i) const { return cuts_[i]; }
  int k() const { return k_; }

  const std::vector<Distribution>& tuples(int cut) const { return tuples_[cut]; }
  std::size_t universe_size() const { return offsets_.back(); }
  std::size_t offset(int cut) const { return offsets_[cut]; }
  std::size_t global_index(int cut, std::size_t local) const {
    return offsets_[cut] + local;
  }
  TupleRef tuple_ref(std::size_t global) const;
  const Distribution& tuple(std::size_t global) const;
  std::optional<std::size_t> find(int cut, const Distribution& t) const;

  // Index of the cut equal to {a, b}, if any.
  std::optional<int> find_cut(Vertex a, Vertex b) const;

 private:
  std::vector<Cut> cuts_;
  int k_ = 1;
  std::vector<std::vector<Distribution>> tuples_;
  std::vector<std::size_t> offsets_{0};
};

// Throws Error when g is disconnected.
CutFamily find_cuts(const Graph& g, int k = 1);

struct Classification {
  Distribution counts;
  // Equivalent to |a ∩ {x, y}| == 1: only then do the counts sum to k - 1.
  bool in_tuple_set = false;
};

Classification classify(const Cut& cut, TokenConfig a);

// Moves the token on the cut to the other cut vertex. Throws Error unless
// exactly one of x, y is occupied.
TokenConfig token_move(TokenConfig a, const Cut& cut);

// Pairwise disjointness of the cuts, and for every ordered pair (S, S') that
// S' lies in a single component of G - S. The second part is reported as
// exempt on the 4-cycle.
struct CutLemmaCheck {
  ClaimStatus disjoint = ClaimStatus::kPass;
  ClaimStatus same_side = ClaimStatus::kPass;
  std::vector<std::string> witnesses;
};

CutLemmaCheck verify_lemma_2cut(const Graph& g, const CutFamily& family);

std::string describe_cut(const Graph& g, const Cut& cut);
std::string describe_tuple(const Distribution& t);

}  // namespace tokgraph

#endif  // TOKGRAPH_CUTS_H_
