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

#include "tokgraph/oracle.h"

#include <algorithm>
#include <string>
#include <vector>

namespace tokgraph {
namespace {

struct Search {
  const Graph& g;
  std::size_t cap;
  std::vector<std::vector<Vertex>> candidates;
  std::vector<int> image;
  std::vector<bool> used;
  std::vector<Permutation> found;

  bool consistent(Vertex v, Vertex target) const {
    for (Vertex u = 0; u < v; ++u) {
      if (g.adjacent(u, v) != g.adjacent(image[u], target)) return false;
    }
    return true;
  }

  void run(Vertex v) {
    const int n = g.num_vertices();
    if (v == n) {
      found.emplace_back(std::vector<Permutation::Point>(image.begin(), image.end()));
      if (found.size() > cap) throw CapExceeded(cap, found.size());
      return;
    }
    for (Vertex target : candidates[v]) {
      if (used[target] || !consistent(v, target)) continue;
      used[target] = true;
      image[v] = target;
      run(v + 1);
      used[target] = false;
    }
    image[v] = -1;
  }
};

}  // namespace

PermGroup brute_force_aut(const Graph& g, const OracleOptions& options) {
  const int n = g.num_vertices();
  if (n > options.max_vertices) {
    throw Error("oracle limited to " + std::to_string(options.max_vertices) +
                " vertices, graph has " + std::to_string(n));
  }
  std::vector<std::vector<int>> signature(n);
  for (Vertex v = 0; v < n; ++v) {
    signature[v].push_back(g.degree(v));
    std::vector<int> nbr;
    for (Vertex u : g.neighbours(v)) nbr.push_back(g.degree(u));
    std::sort(nbr.begin(), nbr.end());
    signature[v].insert(signature[v].end(), nbr.begin(), nbr.end());
  }
  Search search{g, options.cap, {}, std::vector<int>(n, -1),
                std::vector<bool>(n, false), {}};
  search.candidates.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) {
      if (signature[u] == signature[v]) search.candidates[v].push_back(u);
    }
  }
  search.run(0);
  // Lexicographic order puts the identity first.
  std::vector<Permutation> elements = std::move(search.found);
  std::sort(elements.begin(), elements.end());
  PermGroup unordered(static_cast<std::size_t>(n), {}, elements);
  return PermGroup(static_cast<std::size_t>(n), generating_subset(unordered),
                   std::move(elements));
}

}  // namespace tokgraph
