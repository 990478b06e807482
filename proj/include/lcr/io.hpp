#pragma once

// Structured (JSON) documents for graphs, plans, verdicts, reports and gadget
// instances, plus file reading that accepts either edge lists or JSON.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcr/crossing_plan.hpp"
#include "lcr/gadgets.hpp"
#include "lcr/graph.hpp"
#include "lcr/kernel.hpp"
#include "lcr/oracle.hpp"
#include "lcr/transforms.hpp"
#include "lcr/ubp.hpp"
#include "lcr/witness.hpp"

namespace lcr {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Graph

inline json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back(edge_json(e));
  return json{{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

namespace detail {

inline Edge edge_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw ParseError(0, "edge must be a pair of integers, got " + j.dump());
  return make_edge(j[0].get<Vertex>(), j[1].get<Vertex>());
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(0, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace detail

inline Graph graph_from_json(const json& j) {
  const json& nj = detail::field(j, "n");
  if (!nj.is_number_integer() || nj.get<long long>() < 0) throw ParseError(0, "\"n\" must be a non-negative integer");
  const int n = nj.get<int>();
  std::vector<Edge> edges;
  for (const auto& e : detail::field(j, "edges")) edges.push_back(detail::edge_from_json(e));
  try {
    return Graph::from_edges(n, std::move(edges));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(0, ex.what());
  }
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& ex) {
    int line = 1;
    for (size_t i = 0; i < ex.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError(line, std::string("invalid JSON: ") + ex.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline bool looks_like_json(const std::string& text) {
  auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

/// Reads a graph from an edge-list file or a JSON document. A gadget
/// instance document yields its graph.
inline Graph read_graph_file(const std::string& path) {
  const std::string text = read_text_file(path);
  if (!looks_like_json(text)) return parse_graph(text);
  json j = parse_json_text(text);
  if (j.contains("graph")) return graph_from_json(j.at("graph"));
  return graph_from_json(j);
}

// ---------------------------------------------------------------------------
// Crossing plans: crossings as endpoint pairs, orders listed for crossed edges.

inline json to_json(const Graph& g, const CrossingPlan& plan) {
  const CrossingPlan p = canonical_plan(plan);
  json crossings = json::array();
  for (auto [e, f] : p.crossings) crossings.push_back(json::array({edge_json(g.edge(e)), edge_json(g.edge(f))}));
  json orders = json::array();
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (!p.order[e].empty()) orders.push_back(json{{"edge", edge_json(g.edge(e))}, {"crossings", p.order[e]}});
  return json{{"crossings", std::move(crossings)}, {"orders", std::move(orders)}};
}

inline CrossingPlan plan_from_json(const Graph& g, const json& j) {
  auto id_of = [&](const json& ej) {
    Edge e = detail::edge_from_json(ej);
    auto id = g.edge_id(e.u, e.v);
    if (!id) throw ParseError(0, "plan references edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                     "} which is not in the graph");
    return *id;
  };
  CrossingPlan plan = CrossingPlan::empty(g);
  for (const auto& c : detail::field(j, "crossings")) {
    if (!c.is_array() || c.size() != 2) throw ParseError(0, "crossing must be a pair of edges");
    EdgeId a = id_of(c[0]), b = id_of(c[1]);
    plan.crossings.emplace_back(std::min(a, b), std::max(a, b));
  }
  for (const auto& o : detail::field(j, "orders")) {
    EdgeId e = id_of(detail::field(o, "edge"));
    if (!plan.order[e].empty()) throw ParseError(0, "edge listed twice in orders");
    for (const auto& id : detail::field(o, "crossings")) {
      if (!id.is_number_integer()) throw ParseError(0, "crossing ids must be integers");
      plan.order[e].push_back(id.get<CrossingId>());
    }
  }
  return plan;
}

// ---------------------------------------------------------------------------
// Reports

inline json to_json(const Graph& g, const Verdict& v) {
  json j{{"answer", answer_name(v.answer)}, {"k", v.k}};
  if (v.answer == Answer::no) j["reason"] = reason_name(v.reason);
  if (v.witness) {
    j["plan"] = to_json(g, *v.witness);
    j["max_crossings_per_edge"] = crossings_per_edge(g, *v.witness).max;
  }
  j["nodes"] = v.nodes;
  j["seconds"] = v.seconds;
  return j;
}

inline json to_json(const ParamReport& r) {
  return json{{"n", r.n},
              {"m", r.m},
              {"min_degree", r.min_degree},
              {"max_degree", r.max_degree},
              {"components", r.components},
              {"feedback_edge_number", r.feedback_edge_number},
              {"neighborhood_diversity", r.neighborhood_diversity},
              {"approx_vertex_cover", r.approx_vertex_cover}};
}

inline json to_json(const KernelReport& r) {
  json fired = json::array();
  for (const auto& f : r.fired) fired.push_back(json{{"rule", f.rule}, {"count", f.count}});
  json j{{"verdict", r.verdict == KernelVerdict::kernel ? "kernel" : "not-k-planar"}, {"k", r.k}};
  if (r.rejection) j["rejected_by"] = json{{"rule", rule_name(r.rejection->rule)}, {"detail", r.rejection->detail}};
  if (r.t) j["t"] = r.t;
  if (r.ktt) j["ktt"] = json{{"left", r.ktt->first}, {"right", r.ktt->second}};
  j["fired"] = std::move(fired);
  j["cover"] = r.cover;
  j["cover_size"] = r.cover.size();
  j["thresholds"] = json{{"distinct_labels", r.distinct_labels},
                         {"diversity_ceiling", r.diversity_ceiling},
                         {"deg2_twin_keep", deg2_twin_threshold(static_cast<long long>(r.cover.size()), r.k)},
                         {"deg3_reject_at", 7LL * r.k + 1},
                         {"deg3_bound", r.deg3_bound},
                         {"deg2_bound", r.deg2_bound}};
  j["before"] = json{{"n", r.n_before}, {"m", r.m_before}};
  if (r.verdict == KernelVerdict::kernel) {
    j["after"] = json{{"n", r.n_after}, {"m", r.m_after}};
    j["outside"] = json{{"deg3", r.deg3_outside}, {"deg2", r.deg2_outside}};
    j["kernel"] = to_json(r.kernel);
    j["to_original"] = r.to_original;
  }
  j["stripped"] = r.stripped;
  j["deg2_deleted"] = r.deg2_deleted;
  j["seconds"] = r.seconds;
  return j;
}

inline json to_json(const SubdivisionMap& map) {
  json paths = json::array();
  for (EdgeId e = 0; e < map.original.num_edges(); ++e)
    paths.push_back(json{{"edge", edge_json(map.original.edge(e))}, {"path", map.paths[e]}});
  return json{{"k", map.k}, {"original", to_json(map.original)}, {"subdivided", to_json(map.subdivided)},
              {"paths", std::move(paths)}};
}

inline json to_json(const EliminationForest& f) { return json{{"parent", f.parent}}; }

inline EliminationForest forest_from_json(const json& j) {
  EliminationForest f;
  f.parent = detail::field(j, "parent").get<std::vector<Vertex>>();
  return f;
}

inline json to_json(const StructuralCertificate& c) {
  json claims = json::array();
  for (const auto& cl : c.claims)
    claims.push_back(json{{"claim", cl.name}, {"property", cl.property}, {"set", cl.set},
                          {"checked", cl.checked}, {"holds", cl.holds}, {"explanation", cl.explanation}});
  json j{{"family", c.family}, {"claims", std::move(claims)}, {"all_hold", c.all_hold()}};
  if (c.near_planar_edge) j["near_planar_edge"] = edge_json(*c.near_planar_edge);
  return j;
}

inline json partition_json(const Partition& p) { return json(p); }

// ---------------------------------------------------------------------------
// Gadget instances (lossless round trip)

inline json to_json(const GadgetInstance& inst) {
  json names = json::object();
  for (const auto& [n, v] : inst.names) names[n] = v;
  json spokes = json::array();
  for (const auto& reg : inst.spokes)
    for (size_t i = 0; i < reg.targets.size(); ++i)
      spokes.push_back(json{{"hub", reg.hub}, {"target", reg.targets[i]}, {"midpoints", reg.midpoints[i]}});
  json params = json::object();
  for (const auto& [k, v] : inst.params) params[k] = v;
  json j{{"family", inst.family}, {"k", inst.k}, {"graph", to_json(inst.graph)}, {"names", std::move(names)},
         {"spokes", std::move(spokes)}, {"params", std::move(params)}};
  if (!inst.items.empty()) j["items"] = inst.items;
  if (!inst.layer_x.empty() || !inst.layer_y.empty()) j["layers"] = json{{"X", inst.layer_x}, {"Y", inst.layer_y}};
  if (!inst.cycle.empty()) j["cycle"] = inst.cycle;
  if (!inst.item_vertices.empty()) j["item_vertices"] = inst.item_vertices;
  if (inst.forest) j["forest"] = to_json(*inst.forest);
  return j;
}

inline GadgetInstance instance_from_json(const json& j) {
  try {
    GadgetInstance inst;
    inst.family = detail::field(j, "family").get<std::string>();
    inst.k = detail::field(j, "k").get<int>();
    inst.graph = graph_from_json(detail::field(j, "graph"));
    for (const auto& [n, v] : detail::field(j, "names").items()) inst.names.emplace_back(n, v.get<Vertex>());
    for (const auto& s : detail::field(j, "spokes")) {
      const Vertex hub = detail::field(s, "hub").get<Vertex>();
      if (inst.spokes.empty() || inst.spokes.back().hub != hub) {
        inst.spokes.emplace_back();
        inst.spokes.back().hub = hub;
      }
      inst.spokes.back().targets.push_back(detail::field(s, "target").get<Vertex>());
      inst.spokes.back().midpoints.push_back(detail::field(s, "midpoints").get<std::vector<Vertex>>());
    }
    for (const auto& [k, v] : detail::field(j, "params").items()) inst.params[k] = v.get<long long>();
    if (j.contains("items")) inst.items = j.at("items").get<std::vector<long long>>();
    if (j.contains("layers")) {
      inst.layer_x = detail::field(j.at("layers"), "X").get<std::vector<Vertex>>();
      inst.layer_y = detail::field(j.at("layers"), "Y").get<std::vector<Vertex>>();
    }
    if (j.contains("cycle")) inst.cycle = j.at("cycle").get<std::vector<Vertex>>();
    if (j.contains("item_vertices")) inst.item_vertices = j.at("item_vertices").get<std::vector<std::vector<Vertex>>>();
    if (j.contains("forest")) inst.forest = forest_from_json(j.at("forest"));
    return inst;
  } catch (const json::exception& ex) {
    throw ParseError(0, std::string("malformed instance document: ") + ex.what());
  }
}

}  // namespace lcr
