#include <gtest/gtest.h>

#include <random>

#include "lcr/transforms.hpp"

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

// DFS forest with shuffled adjacency; every non-tree edge is a back edge.
EliminationForest dfs_forest(const Graph& g, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = g.num_vertices();
  EliminationForest f;
  f.parent.assign(static_cast<size_t>(n), -1);
  std::vector<char> seen(static_cast<size_t>(n), 0);
  auto dfs = [&](auto&& self, Vertex v) -> void {
    seen[v] = 1;
    std::vector<Vertex> nb(g.neighbors(v).begin(), g.neighbors(v).end());
    std::shuffle(nb.begin(), nb.end(), rng);
    for (Vertex w : nb)
      if (!seen[w]) {
        f.parent[w] = v;
        self(self, w);
      }
  };
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v]) dfs(dfs, v);
  return f;
}

}  // namespace

TEST(Subdivide, ShapeAndPaths) {
  Graph g = complete_graph(4);
  SubdivisionMap map = subdivide(g, 3);
  EXPECT_EQ(map.subdivided.num_vertices(), 4 + 6 * 2);
  EXPECT_EQ(map.subdivided.num_edges(), 18);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& p = map.paths[e];
    ASSERT_EQ(p.size(), 4u);
    EXPECT_EQ(p.front(), g.edge(e).u);
    EXPECT_EQ(p.back(), g.edge(e).v);
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      EdgeId s = *map.subdivided.edge_id(p[i], p[i + 1]);
      EXPECT_EQ(map.segment_owner[s], e);
      EXPECT_EQ(map.segment_position[s], static_cast<int>(i));
    }
  }
  EXPECT_EQ(subdivide(g, 1).subdivided, g);
  EXPECT_THROW(subdivide(g, 0), std::invalid_argument);
}

TEST(Subdivide, SuppressionInvertsIt) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_graph(8, 0.4, seed);
    for (int k : {1, 2, 5}) EXPECT_EQ(suppress_subdivision_vertices(subdivide(g, k).subdivided, 8), g);
  }
}

TEST(Spokes, AttachToNewHub) {
  Graph g = path_graph(3);
  std::vector<Vertex> targets{0, 2};
  auto [h, reg] = attach_spokes(g, targets, 4);
  EXPECT_EQ(reg.hub, 3);
  EXPECT_EQ(h.num_vertices(), 4 + 8);
  EXPECT_EQ(h.num_edges(), 2 + 16);
  EXPECT_EQ(reg.count_for(0), 4);
  EXPECT_EQ(reg.count_for(1), 0);
  EXPECT_EQ(reg.midpoints[0], (std::vector<Vertex>{4, 5, 6, 7}));
  for (size_t i = 0; i < targets.size(); ++i)
    for (Vertex mid : reg.midpoints[i]) {
      EXPECT_EQ(h.degree(mid), 2);
      EXPECT_TRUE(h.has_edge(mid, reg.hub));
      EXPECT_TRUE(h.has_edge(mid, targets[i]));
    }
  EXPECT_THROW(attach_spokes_from(g, 1, std::vector<Vertex>{1}, 2), std::invalid_argument);
}

TEST(Forest, Validation) {
  Graph p = path_graph(5);
  auto chain = validate_elimination_forest(p, chain_forest(5));
  EXPECT_TRUE(chain.valid);
  EXPECT_EQ(chain.height, 5);
  EliminationForest bad;
  bad.parent = {-1, 0, 0, 2, 3};  // 1 and 2 are siblings but adjacent
  auto res = validate_elimination_forest(p, bad);
  EXPECT_FALSE(res.valid);
  EXPECT_NE(res.violation.find("{1,2}"), std::string::npos);
  EliminationForest cyc;
  cyc.parent = {1, 0, -1, -1, -1};
  EXPECT_THROW(validate_elimination_forest(p, cyc), std::invalid_argument);
}

TEST(Forest, BalancedPathHeight) {
  for (int len = 1; len <= 40; ++len) {
    std::vector<Vertex> seq(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) seq[i] = i;
    EliminationForest f;
    f.parent.assign(static_cast<size_t>(len), -2);
    hang_balanced_path(seq, -1, f.parent);
    auto check = validate_elimination_forest(path_graph(len), f);
    EXPECT_TRUE(check.valid);
    EXPECT_EQ(check.height, ceil_log2(len + 1));
  }
}

TEST(Forest, LiftStaysValidAndShallow) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_graph(10, 0.3, seed);
    EliminationForest f = dfs_forest(g, seed);
    const int h = validate_elimination_forest(g, f).height;
    for (int k : {1, 2, 3, 4, 8}) {
      EliminationForest lifted = lift_elimination_forest(g, f, k);
      auto check = validate_elimination_forest(subdivide(g, k).subdivided, lifted);
      EXPECT_TRUE(check.valid) << check.violation;
      EXPECT_LE(check.height, h + ceil_log2(k));
    }
  }
}
