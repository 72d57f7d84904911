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
#include <numeric>
#include <random>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing/fixtures.h"

namespace tokgraph {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

constexpr char kFigure1[] =
    "x1 w\ny1 w\nx1 x2\nx1 y2\ny1 x2\ny1 y2\nx2 z\ny2 z";

std::vector<std::vector<std::string>> component_labels(const Graph& g,
                                                       const ComponentPartition& p,
                                                       const std::vector<Vertex>& to_g = {}) {
  std::vector<std::vector<std::string>> out;
  for (const auto& comp : p.components) {
    std::vector<std::string> labels;
    for (Vertex v : comp) labels.push_back(g.label(to_g.empty() ? v : to_g[v]));
    std::sort(labels.begin(), labels.end());
    out.push_back(labels);
  }
  return out;
}

TEST(ParseEdgeListTest, Figure1Graph) {
  const Graph g = parse_edge_list(kFigure1);
  EXPECT_EQ(g.num_vertices(), 6);
  EXPECT_EQ(g.num_edges(), 8u);
  EXPECT_THAT(g.labels(), ElementsAre("x1", "w", "y1", "x2", "y2", "z"));
  EXPECT_TRUE(g.adjacent(*g.find_label("x1"), *g.find_label("y2")));
  EXPECT_FALSE(g.adjacent(*g.find_label("x1"), *g.find_label("y1")));
}

TEST(ParseEdgeListTest, SingleEdge) {
  const Graph g = parse_edge_list("a b");
  EXPECT_EQ(g.num_vertices(), 2);
  EXPECT_EQ(g.num_edges(), 1u);
}

TEST(ParseEdgeListTest, CommentsAndBlankLines) {
  const Graph g = parse_edge_list("# header\n\n  a b  \n# c d\nb c\n");
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 2u);
}

TEST(ParseEdgeListTest, RejectsDuplicateEdge) {
  EXPECT_THROW(parse_edge_list("a b\na b"), ParseError);
  try {
    parse_edge_list("a b\nb a");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_THAT(e.what(), HasSubstr("duplicate edge"));
  }
}

TEST(ParseEdgeListTest, RejectsSelfLoop) {
  EXPECT_THROW(parse_edge_list("a b\nc c"), ParseError);
}

TEST(ParseEdgeListTest, RejectsMalformedLineWithLineNumber) {
  try {
    parse_edge_list("a b\n\nb c d\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(ParseEdgeListTest, SingleLabelDeclaresVertex) {
  const Graph g = parse_edge_list("iso\na b\n");
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.degree(0), 0);
}

TEST(GraphTest, FromEdgesRejectsInvalidInput) {
  const Edge loop[] = {{1, 1}};
  EXPECT_THROW(Graph::FromEdges(3, loop), Error);
  const Edge dup[] = {{0, 1}, {1, 0}};
  EXPECT_THROW(Graph::FromEdges(3, dup), Error);
  const Edge out_of_range[] = {{0, 3}};
  EXPECT_THROW(Graph::FromEdges(3, out_of_range), Error);
}

TEST(GraphTest, AdjacencyIsSymmetricAndSorted) {
  const Graph g = testing::load_fixture("figure1");
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto& nbrs = g.neighbours(v);
    EXPECT_TRUE(std::is_sorted(nbrs.begin(), nbrs.end()));
    for (Vertex u : nbrs) EXPECT_TRUE(g.adjacent(u, v));
  }
}

TEST(ConnectedComponentsTest, Figure1IsConnected) {
  const Graph g = parse_edge_list(kFigure1);
  EXPECT_EQ(connected_components(g).count(), 1);
}

TEST(ConnectedComponentsTest, Figure1MinusFirstCut) {
  const Graph g = parse_edge_list(kFigure1);
  const Vertex removed[] = {*g.find_label("x1"), *g.find_label("y1")};
  const InducedSubgraph sub = delete_vertices(g, removed);
  const ComponentPartition p = connected_components(sub.graph);
  EXPECT_EQ(p.count(), 2);
  EXPECT_THAT(component_labels(g, p, sub.to_parent),
              ElementsAre(ElementsAre("w"), ElementsAre("x2", "y2", "z")));
}

TEST(ConnectedComponentsTest, EdgelessGraph) {
  EXPECT_EQ(connected_components(Graph(3)).count(), 3);
}

TEST(ConnectedComponentsTest, OrderedBySmallestVertex) {
  const Edge edges[] = {{0, 4}, {1, 3}, {2, 5}};
  const Graph g = Graph::FromEdges(6, edges);
  const ComponentPartition p = connected_components(g);
  ASSERT_EQ(p.count(), 3);
  EXPECT_THAT(p.components[0], ElementsAre(0, 4));
  EXPECT_THAT(p.components[1], ElementsAre(1, 3));
  EXPECT_THAT(p.components[2], ElementsAre(2, 5));
  EXPECT_THAT(p.component_id, ElementsAre(0, 1, 2, 1, 0, 2));
}

TEST(DeleteVerticesTest, SecondCutOfFigure1) {
  const Graph g = parse_edge_list(kFigure1);
  const Vertex removed[] = {*g.find_label("x2"), *g.find_label("y2")};
  const InducedSubgraph sub = delete_vertices(g, removed);
  EXPECT_THAT(component_labels(g, connected_components(sub.graph), sub.to_parent),
              ElementsAre(ElementsAre("w", "x1", "y1"), ElementsAre("z")));
}

TEST(DeleteVerticesTest, EmptySetIsIdentity) {
  const Graph g = testing::load_fixture("figure1");
  EXPECT_EQ(delete_vertices(g, {}).graph, g);
}

TEST(DeleteVerticesTest, AllVertices) {
  const Graph g = parse_edge_list("a b");
  const Vertex removed[] = {0, 1};
  EXPECT_EQ(delete_vertices(g, removed).graph.num_vertices(), 0);
}

TEST(DeleteVerticesTest, RejectsForeignVertex) {
  const Graph g = parse_edge_list("a b");
  const Vertex removed[] = {5};
  EXPECT_THROW(delete_vertices(g, removed), Error);
}

TEST(FourCycleTest, Detects) {
  EXPECT_TRUE(is_four_cycle(testing::load_fixture("c4")));
  EXPECT_FALSE(is_four_cycle(testing::load_fixture("k23")));
  EXPECT_FALSE(is_four_cycle(parse_edge_list("a b\nb c\nc d")));
}

// Random simple graphs with isolated vertices and scrambled labels.
Graph random_graph(std::mt19937& rng, int n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.push_back("v" + std::to_string((v * 7 + 3) % 101));
  return Graph::FromEdges(n, edges, labels);
}

TEST(RoundTripTest, EdgeListAndGraph6) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 13;
    const Graph g = random_graph(rng, n, 0.3);
    EXPECT_EQ(parse_edge_list(render_edge_list(g)), g) << render_edge_list(g);
    const Graph h = parse_graph6(render_graph6(g));
    EXPECT_EQ(h.edges(), g.edges());
    EXPECT_EQ(h.num_vertices(), n);
  }
}

TEST(RoundTripTest, ComponentsFollowRelabeling) {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 9;
    const Graph g = random_graph(rng, n, 0.2);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> moved;
    for (auto [u, v] : g.edges()) moved.emplace_back(perm[u], perm[v]);
    const Graph h = Graph::FromEdges(n, moved);
    const ComponentPartition pg = connected_components(g);
    const ComponentPartition ph = connected_components(h);
    ASSERT_EQ(pg.count(), ph.count());
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        EXPECT_EQ(pg.component_id[u] == pg.component_id[v],
                  ph.component_id[perm[u]] == ph.component_id[perm[v]]);
      }
    }
  }
}

TEST(Graph6Test, KnownEncodings) {
  // Standard examples: K_4 is "C~", the 5-cycle 0-1-2-3-4 is "Dhc".
  const Graph k4 = parse_graph6(">>graph6<<C~\n");
  EXPECT_EQ(k4.num_vertices(), 4);
  EXPECT_EQ(k4.num_edges(), 6u);
  const Graph c5 = parse_graph6("Dhc");
  EXPECT_EQ(c5.num_edges(), 5u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2);
  EXPECT_EQ(render_graph6(k4), "C~");
}

TEST(Graph6Test, RejectsTruncatedInput) {
  EXPECT_THROW(parse_graph6("E"), ParseError);
  EXPECT_THROW(parse_graph6("C~~"), ParseError);
}

TEST(Graph6Test, LargeVertexCountHeader) {
  const Graph g(70);
  const Graph h = parse_graph6(render_graph6(g));
  EXPECT_EQ(h.num_vertices(), 70);
  EXPECT_EQ(h.num_edges(), 0u);
}

TEST(ReadGraphFileTest, MissingFile) {
  EXPECT_THROW(read_graph_file("/nonexistent/graph.edges"), Error);
}

TEST(RenderDotTest, ContainsEdges) {
  const std::string dot = render_dot(parse_edge_list("a b"));
  EXPECT_THAT(dot, HasSubstr("0 -- 1"));
  EXPECT_THAT(dot, HasSubstr("label=\"a\""));
}

}  // namespace
}  // namespace tokgraph
