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

#ifndef TOKGRAPH_GRAPH_H_
#define TOKGRAPH_GRAPH_H_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tokgraph {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the text readers; `line()` is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Simple undirected graph on dense vertex indices 0..n-1. Neighbour lists are
// kept sorted; every vertex carries a label (its index by default).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);

  // Throws Error on self-loops, duplicate edges or out-of-range endpoints.
  static Graph FromEdges(int num_vertices, std::span<const Edge> edges,
                         std::vector<std::string> labels = {});

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  std::size_t num_edges() const { return num_edges_; }

  const std::vector<Vertex>& neighbours(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Vertex> find_label(std::string_view label) const;

  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
  std::size_t num_edges_ = 0;
};

struct ComponentPartition {
  // component_id[v] is the index into `components`, or -1 for vertices that
  // are not part of the partitioned set.
  std::vector<int> component_id;
  std::vector<std::vector<Vertex>> components;

  int count() const { return static_cast<int>(components.size()); }
};

// Components ordered by their smallest vertex; each list sorted.
ComponentPartition connected_components(const Graph& g);

bool is_connected(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // subgraph index -> index in the parent
};

// Induced subgraph on V(g) minus `removed`; labels carry over.
InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> removed);

// Components of g minus `removed`, expressed in g's vertex indices. Removed
// vertices get component id -1.
ComponentPartition components_without(const Graph& g,
                                      std::span<const Vertex> removed);

bool is_four_cycle(const Graph& g);

// Edge-list text: one edge per line as two whitespace-separated labels, `#`
// starts a comment line, blank lines are skipped. A line holding a single
// label declares that vertex (needed for isolated vertices). Labels are
// indexed in order of first appearance.
Graph parse_edge_list(std::string_view text);
std::string render_edge_list(const Graph& g);

// Standard graph6, with or without the `>>graph6<<` header. Vertices are
// labelled by their decimal index.
Graph parse_graph6(std::string_view text);
std::string render_graph6(const Graph& g);

// Graphviz `graph` block with quoted labels.
std::string render_dot(const Graph& g, std::string_view name = "G");

// Picks graph6 when the text carries the header or `path` ends in ".g6".
Graph read_graph_file(const std::string& path);

}  // namespace tokgraph

#endif  // TOKGRAPH_GRAPH_H_
