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

#ifndef TOKGRAPH_TOKEN_GRAPH_H_
#define TOKGRAPH_TOKEN_GRAPH_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tokgraph/graph.h"
#include "tokgraph/permutation.h"

namespace tokgraph {

// Token configurations are 64-bit masks, so base graphs are limited to this
// many vertices.
inline constexpr int kMaxBaseVertices = 64;
inline constexpr std::uint64_t kDefaultMaxTokenVertices = 1'000'000;

// A k-subset of V(G): one bit per occupied vertex.
class TokenConfig {
 public:
  constexpr TokenConfig() = default;
  constexpr explicit TokenConfig(std::uint64_t bits) : bits_(bits) {}
  static TokenConfig FromVertices(std::span<const Vertex> vertices);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1u; }
  std::vector<Vertex> vertices() const;

  constexpr TokenConfig with(Vertex v) const {
    return TokenConfig(bits_ | (std::uint64_t{1} << v));
  }
  constexpr TokenConfig without(Vertex v) const {
    return TokenConfig(bits_ & ~(std::uint64_t{1} << v));
  }
  // V(G) minus this set, for a base graph on n vertices.
  TokenConfig complement(int n) const;

  constexpr auto operator<=>(const TokenConfig&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

// C(n, k) for 0 <= k, n <= 64; zero when k > n.
std::uint64_t binomial(int n, int k);

// Colexicographic rank among k-subsets. Throws Error if c does not hold
// exactly k vertices.
std::uint64_t rank(TokenConfig c, int k);
// Inverse of rank; throws Error unless index < C(n, k).
TokenConfig unrank(std::uint64_t index, int n, int k);

using TokenIndex = std::uint32_t;

// F_k(G): vertices are the k-subsets of V(G) in colex order, adjacent when
// their symmetric difference is an edge of G.
class TokenGraph {
 public:
  const Graph& base() const { return base_; }
  int k() const { return k_; }
  int n() const { return base_.num_vertices(); }
  std::size_t num_vertices() const { return configs_.size(); }
  std::size_t num_edges() const { return neighbours_.size() / 2; }

  TokenConfig config(TokenIndex i) const { return configs_[i]; }
  const std::vector<TokenConfig>& configs() const { return configs_; }
  TokenIndex index_of(TokenConfig c) const;

  std::span<const TokenIndex> neighbours(TokenIndex i) const {
    return {neighbours_.data() + offsets_[i], neighbours_.data() + offsets_[i + 1]};
  }
  int degree(TokenIndex i) const {
    return static_cast<int>(offsets_[i + 1] - offsets_[i]);
  }
  bool adjacent(TokenIndex a, TokenIndex b) const;

  // "{a,b,...}" with base labels in vertex order.
  std::string label(TokenIndex i) const;
  std::string label(TokenConfig c) const;

  // The token graph viewed as a plain Graph, vertices labelled as above.
  Graph as_graph() const;

 private:
  friend TokenGraph build_token_graph(const Graph&, int, std::uint64_t);

  Graph base_;
  int k_ = 0;
  std::vector<TokenConfig> configs_;
  std::vector<std::size_t> offsets_;
  std::vector<TokenIndex> neighbours_;
};

// Requires 1 <= k <= n-1, n <= 64 and C(n, k) <= max_vertices. Edges are
// produced by sliding each token along its incident edges.
TokenGraph build_token_graph(const Graph& g, int k,
                             std::uint64_t max_vertices = kDefaultMaxTokenVertices);

// Configuration from base-graph labels; throws Error on unknown labels.
TokenConfig config_from_labels(const Graph& g,
                               std::span<const std::string_view> labels);
TokenConfig config_from_labels(const Graph& g,
                               std::initializer_list<std::string_view> labels);

// A -> V(G) \ A as an automorphism of F_{n/2}(G). Throws Error if k != n/2.
Permutation complement_automorphism(const TokenGraph& tg);

// A -> V(G) \ A as a map from F_k(G) indices to F_{n-k}(G) indices.
std::vector<TokenIndex> complement_isomorphism(const TokenGraph& tg);

}  // namespace tokgraph

#endif  // TOKGRAPH_TOKEN_GRAPH_H_
