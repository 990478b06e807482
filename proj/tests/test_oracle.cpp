#include <gtest/gtest.h>

#include <random>

#include "lcr/oracle.hpp"

using namespace lcr;

namespace {

Graph random_connected(int n, int m, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph t = random_tree(n, seed);
  std::vector<Edge> es(t.edges().begin(), t.edges().end());
  std::vector<Edge> rest;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!t.has_edge(u, v)) rest.push_back({u, v});
  std::shuffle(rest.begin(), rest.end(), rng);
  for (size_t i = 0; static_cast<int>(es.size()) < m && i < rest.size(); ++i) es.push_back(rest[i]);
  return Graph::from_edges(n, es);
}

void expect_witness(const Graph& g, const Verdict& v) {
  ASSERT_EQ(v.answer, Answer::yes);
  ASSERT_TRUE(v.witness);
  EXPECT_TRUE(verify(g, v.k, *v.witness)) << verify(g, v.k, *v.witness).reason;
}

DecideOptions mode(DecideMode m) {
  DecideOptions o;
  o.mode = m;
  return o;
}

}  // namespace

TEST(Oracle, SmallLandmarks) {
  Verdict k4 = decide_k_planar(complete_graph(4), 0);
  expect_witness(complete_graph(4), k4);
  EXPECT_EQ(k4.witness->num_crossings(), 0);

  Verdict k5_0 = decide_k_planar(complete_graph(5), 0);
  EXPECT_EQ(k5_0.answer, Answer::no);
  Verdict k5 = decide_k_planar(complete_graph(5), 1);
  expect_witness(complete_graph(5), k5);
  EXPECT_EQ(k5.witness->num_crossings(), 1);

  expect_witness(complete_graph(6), decide_one_planar(complete_graph(6)));
  expect_witness(complete_bipartite(3, 3), decide_k_planar(complete_bipartite(3, 3), 1));
}

TEST(Oracle, NoAnswersCarryNoWitness) {
  Verdict v = decide_k_planar(complete_graph(5), 0);
  EXPECT_FALSE(v.witness);
  EXPECT_EQ(v.reason, NoReason::exhausted_search);
  EXPECT_EQ(reason_name(v.reason), "exhausted-search");
}

TEST(Oracle, BudgetGivesInconclusive) {
  DecideOptions o = mode(DecideMode::subdivide);
  o.search.budget = 3;
  Verdict v = decide_k_planar(complete_graph(6), 1, o);
  EXPECT_EQ(v.answer, Answer::inconclusive);
  EXPECT_FALSE(v.witness);
}

TEST(Oracle, ParallelSearchAgrees) {
  DecideOptions o;
  o.search.parallel = true;
  o.search.threads = 3;
  expect_witness(complete_graph(6), decide_k_planar(complete_graph(6), 1, o));
  EXPECT_EQ(decide_k_planar(complete_graph(5), 0, o).answer, Answer::no);
}

TEST(Oracle, ModesAgreeWithBruteForce) {
  int yes = 0, no = 0;
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 5 + static_cast<int>(seed % 2);
    Graph g = random_connected(n, 9, seed);
    for (int k : {1, 2}) {
      const Answer truth = lcr_direct_small(g, k).answer;
      ASSERT_NE(truth, Answer::inconclusive);
      (truth == Answer::yes ? yes : no)++;
      for (DecideMode m : {DecideMode::subdivide, DecideMode::direct, DecideMode::automatic}) {
        Verdict v = decide_k_planar(g, k, mode(m));
        EXPECT_EQ(v.answer, truth) << "seed " << seed << " k " << k;
        if (v.answer == Answer::yes) {
          EXPECT_TRUE(verify(g, k, *v.witness));
        }
      }
    }
  }
  EXPECT_GT(yes, 0);
}

TEST(Oracle, DirectSmallKnowsK33) {
  Graph k33 = complete_bipartite(3, 3);
  EXPECT_EQ(lcr_direct_small(k33, 0).answer, Answer::no);
  Verdict v = lcr_direct_small(k33, 1);
  expect_witness(k33, v);
  EXPECT_THROW(lcr_direct_small(complete_graph(5), 1), std::invalid_argument);
}

TEST(LowerBounds, DensityAndBipartite) {
  EXPECT_EQ(lower_bound_reject(complete_graph(9), 1), NoReason::density);
  EXPECT_FALSE(lower_bound_reject(complete_graph(8), 1));
  EXPECT_EQ(lower_bound_reject(complete_bipartite(3, 8), 1), NoReason::bipartite_obstruction);
  EXPECT_FALSE(lower_bound_reject(complete_bipartite(3, 7), 1));
  EXPECT_EQ(lower_bound_reject(complete_bipartite(3, 15), 2), NoReason::bipartite_obstruction);
  EXPECT_FALSE(lower_bound_reject(complete_bipartite(3, 14), 2));
  Verdict v = decide_k_planar(complete_bipartite(3, 8), 1);
  EXPECT_EQ(v.answer, Answer::no);
  EXPECT_EQ(v.reason, NoReason::bipartite_obstruction);
}

TEST(TwoLayer, CrossingsMatchGeometry) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_connected(7, 8, 100 + trial);
    std::vector<Vertex> xs, ys;
    // Force a bipartite graph by keeping only edges across a random split.
    std::vector<Edge> es;
    for (Vertex v = 0; v < 7; ++v) (v % 2 ? ys : xs).push_back(v);
    for (const auto& e : g.edges())
      if ((e.u % 2) != (e.v % 2)) es.push_back(e);
    Graph b = Graph::from_edges(7, es);
    std::shuffle(xs.begin(), xs.end(), rng);
    std::shuffle(ys.begin(), ys.end(), rng);
    auto counts = two_layer_crossings(b, xs, ys);
    std::vector<int> px(7), py(7);
    for (size_t i = 0; i < xs.size(); ++i) px[xs[i]] = static_cast<int>(i);
    for (size_t i = 0; i < ys.size(); ++i) py[ys[i]] = static_cast<int>(i);
    for (EdgeId e = 0; e < b.num_edges(); ++e) {
      int c = 0;
      auto [x1, y1] = b.edge(e).u % 2 ? std::pair(b.edge(e).v, b.edge(e).u) : std::pair(b.edge(e).u, b.edge(e).v);
      for (EdgeId f = 0; f < b.num_edges(); ++f) {
        auto [x2, y2] =
            b.edge(f).u % 2 ? std::pair(b.edge(f).v, b.edge(f).u) : std::pair(b.edge(f).u, b.edge(f).v);
        if ((px[x1] - px[x2]) * (py[y1] - py[y2]) < 0) ++c;
      }
      EXPECT_EQ(counts[e], c);
    }
  }
}

TEST(TwoLayer, ExactLcr) {
  Graph p = path_graph(5);
  std::vector<Vertex> xs{0, 2, 4}, ys{1, 3};
  EXPECT_EQ(two_layer_lcr(p, xs, ys).lcr, 0);
  Graph c4 = cycle_graph(4);
  EXPECT_EQ(two_layer_lcr(c4, std::vector<Vertex>{0, 2}, std::vector<Vertex>{1, 3}).lcr, 1);
  Graph k33 = complete_bipartite(3, 3);
  auto r = two_layer_lcr(k33, std::vector<Vertex>{0, 1, 2}, std::vector<Vertex>{3, 4, 5});
  EXPECT_EQ(r.lcr, 4);
  auto counts = two_layer_crossings(k33, r.x_order, r.y_order);
  EXPECT_EQ(*std::max_element(counts.begin(), counts.end()), 4);
  EXPECT_THROW(two_layer_lcr(k33, std::vector<Vertex>{0, 1}, std::vector<Vertex>{3, 4, 5}),
               std::invalid_argument);
}
