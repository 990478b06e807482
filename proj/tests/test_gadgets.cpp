#include <gtest/gtest.h>

#include "lcr/gadgets.hpp"

using namespace lcr;

namespace {

std::vector<Vertex> cycle_edges_crossings(const GadgetInstance& inst, const CrossingPlan& plan) {
  const auto& c = inst.cycle;
  std::vector<Vertex> counts;
  for (size_t i = 0; i < c.size(); ++i)
    counts.push_back(static_cast<Vertex>(plan.order[*inst.graph.edge_id(c[i], c[(i + 1) % c.size()])].size()));
  return counts;
}

}  // namespace

TEST(UbpGadget, ReferenceInstanceSizes) {
  GadgetInstance inst = gen_ubp({1, 2, 2, 3, 4}, 4, 3, UbpVariant::basic);
  EXPECT_EQ(inst.family, "ubp-basic");
  EXPECT_EQ(inst.graph.num_vertices(), 686);
  EXPECT_EQ(inst.graph.num_edges(), 1363);
  EXPECT_EQ(inst.param("m"), 43);
  EXPECT_EQ(inst.param("l1"), 44);
  EXPECT_EQ(inst.param("l2"), 176);
  EXPECT_EQ(inst.k, 1);
  EXPECT_EQ(inst.cycle.size(), 12u);
  EXPECT_EQ(inst.name("v2"), inst.cycle[4]);
  EXPECT_EQ(inst.spokes[0].count_for(inst.name("v1")), 44);
  EXPECT_EQ(inst.spokes[1].count_for(inst.name("v3")), 176);
}

TEST(UbpGadget, ReferenceInstanceWitness) {
  GadgetInstance inst = gen_ubp({1, 2, 2, 3, 4}, 4, 3, UbpVariant::basic);
  auto bins = solve_ubp(UbpInstance{inst.items, 4, 3});
  ASSERT_TRUE(bins);
  CrossingPlan plan = witness_ubp(inst, *bins);
  EXPECT_TRUE(verify(inst.graph, 1, plan));
  EXPECT_EQ(plan.num_crossings(), 12);
  for (Vertex c : cycle_edges_crossings(inst, plan)) EXPECT_EQ(c, 1);
  EXPECT_THROW(witness_ubp(inst, Partition{{4}, {4}, {3, 2, 2, 1}}), std::invalid_argument);
}

TEST(UbpGadget, DominationWitness) {
  GadgetInstance inst = gen_ubp({1, 2, 2, 3, 4}, 4, 3, UbpVariant::domination);
  EXPECT_EQ(inst.family, "ubp-domination");
  CrossingPlan plan = witness_ubp(inst, Partition{{3, 1}, {2, 2}, {4}});
  EXPECT_TRUE(verify(inst.graph, 1, plan));
  EXPECT_EQ(plan.num_crossings(), 19);
  StructuralCertificate cert = certify(inst);
  EXPECT_TRUE(cert.all_hold());
}

TEST(UbpGadget, TwinCoverVariant) {
  // Items at most sqrt(B) - 1 = 2 with B = 9.
  GadgetInstance inst = gen_ubp({2, 2, 2, 1, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1}, 9, 3, UbpVariant::twincover);
  EXPECT_EQ(inst.k, 9);
  EXPECT_EQ(inst.cycle.size(), 3u);
  const long long sum_pairs = 11;  // C(2,2) per item of size 2
  EXPECT_EQ(inst.param("m"), 3 + sum_pairs + 2 * 27);
  StructuralCertificate cert = certify(inst);
  ASSERT_EQ(cert.claims.size(), 1u);
  EXPECT_TRUE(cert.claims[0].holds) << cert.claims[0].explanation;
  EXPECT_EQ(cert.claims[0].set.size(), 5u);
  EXPECT_THROW(gen_ubp({4, 4, 1}, 3, 3, UbpVariant::twincover), std::invalid_argument);
}

TEST(UbpGadget, Certificates) {
  StructuralCertificate cert = certify(gen_ubp({1, 2, 2, 3, 4}, 4, 3, UbpVariant::basic));
  EXPECT_TRUE(cert.all_hold());
  ASSERT_TRUE(cert.near_planar_edge);
  EXPECT_EQ(*cert.near_planar_edge, (Edge{2, 3}));
}

TEST(TwoSided, SingleEdge) {
  Graph e = path_graph(2);
  GadgetInstance inst = gen_two_sided(e, std::vector<Vertex>{0}, std::vector<Vertex>{1}, 1);
  EXPECT_EQ(inst.graph.num_vertices(), 14);
  EXPECT_EQ(inst.param("l1"), 2);
  EXPECT_EQ(inst.param("l2"), 4);
  EXPECT_EQ(inst.name("uX"), 2);
  EXPECT_TRUE(certify(inst).all_hold());
}

TEST(TwoSided, K22Witness) {
  Graph c4 = cycle_graph(4);
  std::vector<Vertex> X{0, 2}, Y{1, 3};
  GadgetInstance inst = gen_two_sided(c4, X, Y, 1);
  CrossingPlan plan = witness_two_sided(inst, X, Y);
  EXPECT_TRUE(verify(inst.graph, 1, plan));
  EXPECT_EQ(plan.num_crossings(), 1);
  // A non-forest source: the acyclicity claim is reported as not applicable.
  StructuralCertificate cert = certify(inst);
  EXPECT_FALSE(cert.claims[0].checked);
}

TEST(TwoSided, RandomTreesAtTheirTwoLayerNumber) {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    Graph t = random_tree(3 + static_cast<int>(seed % 4), seed);
    auto [X, Y] = bipartition(t);
    TwoLayerResult best = two_layer_lcr(t, X, Y);
    const int k = std::max(1, best.lcr);
    GadgetInstance inst = gen_two_sided(t, X, Y, k);
    CrossingPlan plan = witness_two_sided(inst, best.x_order, best.y_order, seed);
    EXPECT_TRUE(verify(inst.graph, k, plan)) << "seed " << seed;
    EXPECT_TRUE(certify(inst).all_hold());
  }
}

TEST(Bandwidth, ShapeAndForest) {
  Graph t = path_graph(4);
  EliminationForest f;
  f.parent = {1, -1, 1, 2};
  GadgetInstance inst = gen_bandwidth_to_two_sided(t, 2, 8, f);
  EXPECT_EQ(inst.graph.num_vertices(), 4 + 3 + 4 * 8);
  EXPECT_TRUE(is_tree(inst.graph));
  EXPECT_EQ(inst.k, (8 + 4) * (2 - 1) / 2);
  EXPECT_EQ(inst.layer_x.size() + inst.layer_y.size(), 39u);
  ASSERT_TRUE(inst.forest);
  auto check = validate_elimination_forest(inst.graph, *inst.forest);
  EXPECT_TRUE(check.valid);
  EXPECT_LE(check.height, validate_elimination_forest(t, f).height + 1);
  EXPECT_TRUE(certify(inst).all_hold());
  EXPECT_THROW(gen_bandwidth_to_two_sided(t, 2, 7), std::invalid_argument);
  EXPECT_THROW(gen_bandwidth_to_two_sided(t, 3, 8), std::invalid_argument);
  EXPECT_THROW(gen_bandwidth_to_two_sided(cycle_graph(4), 1, 2), std::invalid_argument);
}

TEST(Gap, Parameters) {
  GadgetInstance inst = gen_gap_instance(random_tree(5, 2), 2, 6, 2);
  EXPECT_EQ(inst.family, "gap");
  EXPECT_EQ(inst.param("l"), 8);
  EXPECT_EQ(inst.k, 6);
  EXPECT_EQ(inst.param("yes_threshold"), 6);
  EXPECT_EQ(inst.param("no_threshold"), 24);
  EXPECT_THROW(gen_gap_instance(random_tree(5, 2), 2, 5), std::invalid_argument);
}
