#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lcr/graph.hpp"

using namespace lcr;

namespace {

Graph random_graph(int n, double p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.push_back({u, v});
  return Graph::from_edges(n, es);
}

// N(u) - {v} == N(v) - {u}
bool brute_twins(const Graph& g, Vertex u, Vertex v) {
  std::set<Vertex> a(g.neighbors(u).begin(), g.neighbors(u).end());
  std::set<Vertex> b(g.neighbors(v).begin(), g.neighbors(v).end());
  a.erase(v);
  b.erase(u);
  return a == b;
}

int brute_min_cover(const Graph& g) {
  const int n = g.num_vertices();
  int best = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& e : g.edges())
      if (!((mask >> e.u) & 1) && !((mask >> e.v) & 1)) ok = false;
    if (ok) best = std::min(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace

TEST(Parse, RoundTrip) {
  Graph g = complete_graph(5);
  EXPECT_EQ(parse_graph(write_graph(g)), g);
  EXPECT_EQ(g.num_edges(), 10);
}

TEST(Parse, CommentsAndBlankLines) {
  Graph g = parse_graph("# triangle\n\n3 3\n0 1\n# mid\n1 2\n\n2 0\n");
  EXPECT_EQ(g, cycle_graph(3));
}

TEST(Parse, ErrorsCarryLineNumbers) {
  auto line_of = [](std::string_view text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("3 2\n0 1\n0 1\n"), 3);  // duplicate
  EXPECT_EQ(line_of("3 1\n0 0\n"), 2);       // loop
  EXPECT_EQ(line_of("3 1\n0 7\n"), 2);       // out of range
  EXPECT_EQ(line_of("3 1\n0 x\n"), 2);
  EXPECT_GT(line_of("3 2\n0 1\n"), 0);       // too few edges
  EXPECT_EQ(line_of("hello\n"), 1);
}

TEST(Graph, CanonicalEdgesAndAdjacency) {
  Graph g = Graph::from_edges(4, {{3, 0}, {2, 1}, {0, 1}});
  ASSERT_EQ(g.num_edges(), 3);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
  EXPECT_EQ(g.edge(1), (Edge{0, 3}));
  EXPECT_EQ(g.degree(0), 2);
  EXPECT_TRUE(g.has_edge(3, 0));
  EXPECT_FALSE(g.has_edge(2, 3));
  EXPECT_EQ(*g.edge_id(1, 2), 2);
  EXPECT_THROW(Graph::from_edges(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_EQ(Graph::from_edges_simplified(2, {{0, 1}, {1, 0}, {1, 1}}).num_edges(), 1);
}

TEST(Graph, Constructors) {
  EXPECT_EQ(complete_graph(7).num_edges(), 21);
  Graph k33 = complete_bipartite(3, 3);
  EXPECT_EQ(k33.num_edges(), 9);
  EXPECT_FALSE(k33.has_edge(0, 1));
  EXPECT_TRUE(k33.has_edge(0, 5));
  EXPECT_EQ(path_graph(4).num_edges(), 3);
  Graph t = random_tree(30, 7);
  EXPECT_EQ(t.num_edges(), 29);
  EXPECT_EQ(count_components(t), 1);
}

TEST(Graph, InducedAndDelete) {
  Graph g = complete_graph(5);
  auto sub = induced_subgraph(g, std::vector<Vertex>{4, 1, 2});
  EXPECT_EQ(sub.graph, complete_graph(3));
  EXPECT_EQ(sub.to_original, (std::vector<Vertex>{4, 1, 2}));
  auto del = delete_vertices(g, std::vector<Vertex>{0});
  EXPECT_EQ(del.graph, complete_graph(4));
  EXPECT_EQ(del.to_original, (std::vector<Vertex>{1, 2, 3, 4}));
}

TEST(Strip, RemovesTreesHangingOffTheCore) {
  // Triangle 0-1-2 with a path 2-3-4 and an isolated vertex 5.
  Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
  StripResult s = strip_low_degree(g);
  EXPECT_EQ(s.graph, cycle_graph(3));
  EXPECT_EQ(s.to_original, (std::vector<Vertex>{0, 1, 2}));
  std::set<Vertex> removed(s.removed.begin(), s.removed.end());
  EXPECT_EQ(removed, (std::set<Vertex>{3, 4, 5}));
  EXPECT_EQ(strip_low_degree(random_tree(40, 3)).graph.num_vertices(), 0);
}

TEST(Cover, ApproximationWithinFactorTwo) {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = random_graph(9, 0.35, seed);
    auto c = approx_vertex_cover(g);
    EXPECT_TRUE(is_vertex_cover(g, c));
    EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
    EXPECT_LE(static_cast<int>(c.size()), 2 * brute_min_cover(g));
  }
}

TEST(Twins, MatchesPairwiseRelation) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 7);
    Graph g = random_graph(n, seed % 3 == 0 ? 0.7 : 0.4, seed);
    TwinPartition tp = twin_partition(g);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        EXPECT_EQ(tp.class_of[u] == tp.class_of[v], brute_twins(g, u, v)) << "seed " << seed;
    for (size_t c = 0; c < tp.classes.size(); ++c) {
      const auto& cls = tp.classes[c];
      if (cls.size() < 2) continue;
      EXPECT_EQ(tp.kind[c] == TwinKind::true_twin, g.has_edge(cls[0], cls[1]));
    }
  }
}

TEST(Twins, Examples) {
  EXPECT_EQ(twin_partition(complete_graph(6)).diversity(), 1);
  EXPECT_EQ(twin_partition(complete_bipartite(4, 5)).diversity(), 2);
  EXPECT_EQ(twin_partition(path_graph(4)).diversity(), 4);
  EXPECT_EQ(twin_partition(Graph(3)).diversity(), 1);
}

TEST(Params, Report) {
  Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  ParamReport r = param_report(g);
  EXPECT_EQ(r.n, 7);
  EXPECT_EQ(r.m, 4);
  EXPECT_EQ(r.min_degree, 0);
  EXPECT_EQ(r.max_degree, 2);
  EXPECT_EQ(r.components, 4);
  EXPECT_EQ(r.feedback_edge_number, 1);
  EXPECT_EQ(r.approx_vertex_cover, 4);
}

TEST(Structure, Properties) {
  EXPECT_TRUE(check_structure(random_tree(12, 1), Property::acyclic).holds);
  EXPECT_FALSE(check_structure(cycle_graph(4), Property::acyclic).holds);
  EXPECT_TRUE(check_structure(path_graph(5), Property::path_forest).holds);
  EXPECT_FALSE(check_structure(complete_bipartite(1, 3), Property::path_forest).holds);
  EXPECT_TRUE(check_structure(cycle_graph(5), Property::unicyclic).holds);
  EXPECT_FALSE(check_structure(complete_graph(4), Property::unicyclic).holds);
  Graph star = complete_bipartite(1, 5);
  EXPECT_TRUE(check_structure(star, Property::dominating_set, std::vector<Vertex>{0}).holds);
  EXPECT_FALSE(check_structure(star, Property::dominating_set, std::vector<Vertex>{1}).holds);
  // Two triangles joined through vertex 6: {6} is a twin cover.
  Graph tc = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 6}, {1, 6}, {2, 6},
                                   {3, 6}, {4, 6}, {5, 6}});
  EXPECT_TRUE(check_structure(tc, Property::twin_cover, std::vector<Vertex>{6}).holds);
  EXPECT_FALSE(check_structure(path_graph(3), Property::twin_cover, std::vector<Vertex>{}).holds);
}

TEST(Structure, LabelsRenameVertices) {
  auto res = check_structure(complete_bipartite(1, 3), Property::path_forest, {}, std::vector<Vertex>{10, 11, 12, 13});
  EXPECT_NE(res.explanation.find("10"), std::string::npos);
  EXPECT_EQ(parse_property("twin-cover"), Property::twin_cover);
  EXPECT_EQ(property_name(Property::path_forest), "path-forest");
}
