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

#include "tokgraph/graph.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace tokgraph {

ParseError::ParseError(int line, const std::string& what)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

Graph::Graph(int num_vertices)
    : adj_(static_cast<std::size_t>(num_vertices)),
      labels_(static_cast<std::size_t>(num_vertices)) {
  if (num_vertices < 0) throw Error("negative vertex count");
  for (int v = 0; v < num_vertices; ++v) labels_[v] = std::to_string(v);
}

Graph Graph::FromEdges(int num_vertices, std::span<const Edge> edges,
                       std::vector<std::string> labels) {
  Graph g(num_vertices);
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != num_vertices) {
      throw Error("label count does not match vertex count");
    }
    g.labels_ = std::move(labels);
  }
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw Error("edge endpoint out of range");
    }
    if (u == v) throw Error("self-loop at " + g.labels_[u]);
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw Error("duplicate edge");
    }
  }
  g.num_edges_ = edges.size();
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::optional<Vertex> Graph::find_label(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

ComponentPartition components_without(const Graph& g,
                                      std::span<const Vertex> removed) {
  const int n = g.num_vertices();
  std::vector<bool> skip(n, false);
  for (Vertex v : removed) {
    if (v < 0 || v >= n) throw Error("vertex out of range");
    skip[v] = true;
  }
  ComponentPartition p;
  p.component_id.assign(n, -1);
  // Scanning seeds in index order yields components sorted by smallest vertex.
  for (Vertex seed = 0; seed < n; ++seed) {
    if (skip[seed] || p.component_id[seed] != -1) continue;
    const int id = p.count();
    std::vector<Vertex> members;
    std::queue<Vertex> frontier;
    frontier.push(seed);
    p.component_id[seed] = id;
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      members.push_back(u);
      for (Vertex v : g.neighbours(u)) {
        if (skip[v] || p.component_id[v] != -1) continue;
        p.component_id[v] = id;
        frontier.push(v);
      }
    }
    std::sort(members.begin(), members.end());
    p.components.push_back(std::move(members));
  }
  return p;
}

ComponentPartition connected_components(const Graph& g) {
  return components_without(g, {});
}

bool is_connected(const Graph& g) {
  return connected_components(g).count() <= 1;
}

InducedSubgraph delete_vertices(const Graph& g,
                                std::span<const Vertex> removed) {
  const int n = g.num_vertices();
  std::vector<int> new_index(n, 0);
  for (Vertex v : removed) {
    if (v < 0 || v >= n) throw Error("vertex to delete is not in the graph");
    new_index[v] = -1;
  }
  InducedSubgraph sub;
  std::vector<std::string> labels;
  for (Vertex v = 0; v < n; ++v) {
    if (new_index[v] == -1) continue;
    new_index[v] = static_cast<int>(sub.to_parent.size());
    sub.to_parent.push_back(v);
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (new_index[u] >= 0 && new_index[v] >= 0) {
      edges.emplace_back(new_index[u], new_index[v]);
    }
  }
  const int n_sub = static_cast<int>(sub.to_parent.size());
  sub.graph = Graph::FromEdges(n_sub, edges, std::move(labels));
  return sub;
}

bool is_four_cycle(const Graph& g) {
  if (g.num_vertices() != 4 || g.num_edges() != 4) return false;
  for (Vertex v = 0; v < 4; ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

namespace {

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> seen;

  auto intern = [&](std::string_view label) {
    auto [it, inserted] =
        index.emplace(std::string(label), static_cast<Vertex>(labels.size()));
    if (inserted) {
      labels.emplace_back(label);
      seen.emplace_back();
    }
    return it->second;
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = split_whitespace(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() == 1) {
      intern(tokens[0]);
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two labels, got " +
                                    std::to_string(tokens.size()));
    }
    if (tokens[0] == tokens[1]) {
      throw ParseError(line_no, "self-loop at " + std::string(tokens[0]));
    }
    Vertex u = intern(tokens[0]);
    Vertex v = intern(tokens[1]);
    auto& su = seen[u];
    if (std::find(su.begin(), su.end(), v) != su.end()) {
      throw ParseError(line_no, "duplicate edge " + std::string(tokens[0]) +
                                    " " + std::string(tokens[1]));
    }
    su.push_back(v);
    seen[v].push_back(u);
    edges.emplace_back(u, v);
  }
  const int n = static_cast<int>(labels.size());
  return Graph::FromEdges(n, edges, std::move(labels));
}

std::string render_edge_list(const Graph& g) {
  const auto edges = g.edges();
  // Declare vertices up front only when the edge order alone would not
  // reproduce the indexing.
  std::vector<bool> appeared(g.num_vertices(), false);
  std::vector<Vertex> order;
  for (auto [u, v] : edges) {
    for (Vertex w : {u, v}) {
      if (!appeared[w]) {
        appeared[w] = true;
        order.push_back(w);
      }
    }
  }
  bool identity = static_cast<int>(order.size()) == g.num_vertices();
  for (std::size_t i = 0; identity && i < order.size(); ++i) {
    identity = order[i] == static_cast<Vertex>(i);
  }
  std::ostringstream out;
  if (!identity) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) out << g.label(v) << '\n';
  }
  for (auto [u, v] : edges) out << g.label(u) << ' ' << g.label(v) << '\n';
  return out.str();
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  while (!text.empty() &&
         std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw ParseError(0, "graph6: truncated input");
    int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw ParseError(0, "graph6: byte out of range");
    return c - 63;
  };
  long long n = next();
  if (n == 63) {
    n = 0;
    int width = 3;
    if (pos < text.size() && text[pos] == '~') {
      ++pos;
      width = 6;
    }
    for (int i = 0; i < width; ++i) n = (n << 6) | next();
  }
  if (n > (1 << 20)) throw ParseError(0, "graph6: vertex count too large");
  std::vector<Edge> edges;
  int bits_left = 0;
  int word = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (bits_left == 0) {
        word = next();
        bits_left = 6;
      }
      --bits_left;
      if ((word >> bits_left) & 1) edges.emplace_back(i, j);
    }
  }
  if (pos != text.size()) throw ParseError(0, "graph6: trailing bytes");
  return Graph::FromEdges(static_cast<int>(n), edges);
}

std::string render_graph6(const Graph& g) {
  const long long n = g.num_vertices();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < 258048) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  int word = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + 63));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + 63));
  return out;
}

std::string render_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v << " [label=\"" << g.label(v) << "\"];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (text.starts_with(kGraph6Header) ||
      (path.size() > 3 && path.ends_with(".g6"))) {
    return parse_graph6(text);
  }
  return parse_edge_list(text);
}

}  // namespace tokgraph
