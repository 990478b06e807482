#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "lcr/io.hpp"

using namespace lcr;

namespace {

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("lcr_io_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Io, GraphRoundTrip) {
  Graph g = complete_bipartite(2, 3);
  json j = to_json(g);
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(j["edges"].size(), 6u);
  EXPECT_EQ(graph_from_json(parse_json_text(j.dump())), g);
}

TEST(Io, GraphErrors) {
  EXPECT_THROW(graph_from_json(json::parse(R"({"edges": []})")), ParseError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"n": 2, "edges": [[0, 0]]})")), ParseError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"n": 2, "edges": [[0]]})")), ParseError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"n": -1, "edges": []})")), ParseError);
}

TEST(Io, JsonSyntaxErrorReportsLine) {
  try {
    parse_json_text("{\n  \"n\": 3,\n  \"edges\": [[0, 1],,]\n}");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Io, PlanRoundTrip) {
  Graph k5 = complete_graph(5);
  CrossingPlan p = CrossingPlan::empty(k5);
  p.add_crossing(*k5.edge_id(0, 2), *k5.edge_id(1, 3));
  json j = to_json(k5, p);
  EXPECT_EQ(j["crossings"][0][0], json::array({0, 2}));
  EXPECT_EQ(plan_from_json(k5, j), canonical_plan(p));
  json bad = j;
  bad["crossings"][0][0] = json::array({0, 7});
  EXPECT_THROW(plan_from_json(k5, bad), ParseError);
  EXPECT_EQ(plan_from_json(k5, json::parse(R"({"crossings": [], "orders": []})")), CrossingPlan::empty(k5));
}

TEST(Io, VerdictDocument) {
  Graph k5 = complete_graph(5);
  Verdict v = decide_k_planar(k5, 1);
  json j = to_json(k5, v);
  EXPECT_EQ(j["answer"], "yes");
  EXPECT_EQ(j["max_crossings_per_edge"], 1);
  EXPECT_TRUE(verify(k5, 1, plan_from_json(k5, j["plan"])));
  json no = to_json(k5, decide_k_planar(k5, 0));
  EXPECT_EQ(no["answer"], "no");
  EXPECT_EQ(no["reason"], "exhausted-search");
  EXPECT_FALSE(no.contains("plan"));
}

TEST(Io, Reports) {
  Graph g = complete_bipartite(2, 100);
  json rep = to_json(kernelize_vc(g, 1, std::vector<Vertex>{0, 1}));
  EXPECT_EQ(rep["verdict"], "kernel");
  EXPECT_EQ(rep["after"]["n"], 34);
  EXPECT_EQ(graph_from_json(rep["kernel"]).num_vertices(), 34);
  json rej = to_json(kernelize_nd(complete_bipartite(16, 16), 1));
  EXPECT_EQ(rej["verdict"], "not-k-planar");
  EXPECT_EQ(rej["rejected_by"]["rule"], "twin_vertex_cover");
  EXPECT_EQ(to_json(param_report(g))["neighborhood_diversity"], 2);
  json sub = to_json(subdivide(complete_graph(4), 3));
  EXPECT_EQ(sub["subdivided"]["n"], 16);
  EXPECT_EQ(sub["paths"][0]["path"].size(), 4u);
}

TEST(Io, InstanceRoundTripIsLossless) {
  std::vector<GadgetInstance> all;
  all.push_back(gen_ubp({1, 2, 2, 3, 4}, 4, 3, UbpVariant::basic));
  all.push_back(gen_ubp({1, 2, 2, 3, 4}, 4, 3, UbpVariant::domination));
  all.push_back(gen_ubp({2, 2, 2, 1, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1}, 9, 3, UbpVariant::twincover));
  all.push_back(gen_two_sided(cycle_graph(4), std::vector<Vertex>{0, 2}, std::vector<Vertex>{1, 3}, 1));
  all.push_back(gen_bandwidth_to_two_sided(path_graph(3), 1, 2, chain_forest(3)));
  all.push_back(gen_gap_instance(random_tree(4, 1), 1, 3));
  for (const auto& inst : all) {
    GadgetInstance back = instance_from_json(parse_json_text(to_json(inst).dump()));
    EXPECT_TRUE(back == inst) << inst.family;
    EXPECT_EQ(to_json(back).dump(), to_json(inst).dump());
  }
}

TEST(Io, ReadGraphFileDetectsFormat) {
  auto el = temp_file("k4.el", write_graph(complete_graph(4)));
  auto js = temp_file("k4.json", to_json(complete_graph(4)).dump());
  auto inst = temp_file("inst.json", to_json(gen_two_sided(path_graph(2), std::vector<Vertex>{0},
                                                           std::vector<Vertex>{1}, 1)).dump());
  EXPECT_EQ(read_graph_file(el), complete_graph(4));
  EXPECT_EQ(read_graph_file(js), complete_graph(4));
  EXPECT_EQ(read_graph_file(inst).num_vertices(), 14);
  auto broken = temp_file("broken.el", "3 2\n0 1\n0 1\n");
  try {
    read_graph_file(broken);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(read_graph_file("/nonexistent/graph.el"), std::runtime_error);
  for (const auto& p : {el, js, inst, broken}) std::remove(p.c_str());
}
