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

#include "tokgraph/token_graph.h"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>

namespace tokgraph {
namespace {

struct BinomialTable {
  std::array<std::array<std::uint64_t, 65>, 65> c{};
  BinomialTable() {
    for (int n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
    }
  }
};

const BinomialTable& table() {
  static const BinomialTable t;
  return t;
}

}  // namespace

TokenConfig TokenConfig::FromVertices(std::span<const Vertex> vertices) {
  std::uint64_t bits = 0;
  for (Vertex v : vertices) {
    if (v < 0 || v >= kMaxBaseVertices) throw Error("vertex out of range");
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (bits & bit) throw Error("repeated vertex in configuration");
    bits |= bit;
  }
  return TokenConfig(bits);
}

std::vector<Vertex> TokenConfig::vertices() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

TokenConfig TokenConfig::complement(int n) const {
  const std::uint64_t all =
      n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return TokenConfig(~bits_ & all);
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || n > 64) throw Error("binomial argument out of range");
  if (k > n) return 0;
  return table().c[n][k];
}

std::uint64_t rank(TokenConfig c, int k) {
  if (c.size() != k) {
    throw Error("configuration holds " + std::to_string(c.size()) +
                " tokens, expected " + std::to_string(k));
  }
  std::uint64_t r = 0;
  int i = 1;
  for (std::uint64_t b = c.bits(); b != 0; b &= b - 1, ++i) {
    r += table().c[std::countr_zero(b)][i];
  }
  return r;
}

TokenConfig unrank(std::uint64_t index, int n, int k) {
  if (n < 0 || n > kMaxBaseVertices || k < 0 || k > n) {
    throw Error("unrank: bad (n, k)");
  }
  if (index >= binomial(n, k)) throw Error("unrank: index out of range");
  std::uint64_t bits = 0;
  int c = n - 1;
  for (int j = k; j >= 1; --j) {
    while (table().c[c][j] > index) --c;
    bits |= std::uint64_t{1} << c;
    index -= table().c[c][j];
    --c;
  }
  return TokenConfig(bits);
}

TokenIndex TokenGraph::index_of(TokenConfig c) const {
  if (n() < 64 && (c.bits() >> n()) != 0) throw Error("configuration outside V(G)");
  return static_cast<TokenIndex>(rank(c, k_));
}

bool TokenGraph::adjacent(TokenIndex a, TokenIndex b) const {
  auto nbrs = neighbours(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::string TokenGraph::label(TokenConfig c) const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Vertex v : c.vertices()) {
    if (!first) out << ',';
    first = false;
    out << base_.label(v);
  }
  out << '}';
  return out.str();
}

std::string TokenGraph::label(TokenIndex i) const { return label(configs_[i]); }

Graph TokenGraph::as_graph() const {
  std::vector<Edge> edges;
  edges.reserve(num_edges());
  std::vector<std::string> labels;
  labels.reserve(num_vertices());
  for (TokenIndex a = 0; a < num_vertices(); ++a) {
    labels.push_back(label(a));
    for (TokenIndex b : neighbours(a)) {
      if (a < b) edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  const int n = static_cast<int>(num_vertices());
  return Graph::FromEdges(n, edges, std::move(labels));
}

TokenGraph build_token_graph(const Graph& g, int k, std::uint64_t max_vertices) {
  const int n = g.num_vertices();
  if (n > kMaxBaseVertices) {
    throw Error("base graph has more than 64 vertices");
  }
  if (k < 1 || k > n - 1) {
    throw Error("token count k=" + std::to_string(k) +
                " outside [1, n-1] for n=" + std::to_string(n));
  }
  const std::uint64_t count = binomial(n, k);
  if (count > max_vertices ||
      count > std::numeric_limits<TokenIndex>::max()) {
    throw Error("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                std::to_string(count) + " exceeds the vertex limit " +
                std::to_string(max_vertices));
  }
  TokenGraph tg;
  tg.base_ = g;
  tg.k_ = k;
  tg.configs_.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) tg.configs_.push_back(unrank(i, n, k));

  tg.offsets_.assign(count + 1, 0);
  std::vector<TokenIndex> scratch;
  for (std::uint64_t i = 0; i < count; ++i) {
    const TokenConfig a = tg.configs_[i];
    scratch.clear();
    for (Vertex u : a.vertices()) {
      for (Vertex v : g.neighbours(u)) {
        if (a.contains(v)) continue;
        scratch.push_back(static_cast<TokenIndex>(rank(a.without(u).with(v), k)));
      }
    }
    std::sort(scratch.begin(), scratch.end());
    tg.neighbours_.insert(tg.neighbours_.end(), scratch.begin(), scratch.end());
    tg.offsets_[i + 1] = tg.neighbours_.size();
  }
  return tg;
}

TokenConfig config_from_labels(const Graph& g,
                               std::span<const std::string_view> labels) {
  std::vector<Vertex> vs;
  for (auto label : labels) {
    auto v = g.find_label(label);
    if (!v) throw Error("unknown vertex label '" + std::string(label) + "'");
    vs.push_back(*v);
  }
  return TokenConfig::FromVertices(vs);
}

TokenConfig config_from_labels(const Graph& g,
                               std::initializer_list<std::string_view> labels) {
  return config_from_labels(g, std::span<const std::string_view>(labels.begin(),
                                                                 labels.size()));
}

Permutation complement_automorphism(const TokenGraph& tg) {
  if (2 * tg.k() != tg.n()) {
    throw Error("complement is an automorphism only when k = n/2");
  }
  return Permutation(complement_isomorphism(tg));
}

std::vector<TokenIndex> complement_isomorphism(const TokenGraph& tg) {
  std::vector<TokenIndex> image(tg.num_vertices());
  const int k = tg.n() - tg.k();
  for (TokenIndex i = 0; i < tg.num_vertices(); ++i) {
    image[i] = static_cast<TokenIndex>(rank(tg.config(i).complement(tg.n()), k));
  }
  return image;
}

}  // namespace tokgraph
