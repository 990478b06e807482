#pragma once

// Combinatorial drawing witnesses. A CrossingPlan lists which edge pairs cross
// and, for every edge, the order of its crossings walking from the smaller
// endpoint to the larger one. Replacing every crossing by a degree-4 dummy
// vertex yields the planarization; the plan certifies lcr <= k when every
// edge carries at most k crossings and the planarization is planar.

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lcr/graph.hpp"

namespace lcr {

using CrossingId = int;

struct CrossingPlan {
  std::vector<std::pair<EdgeId, EdgeId>> crossings;  // smaller edge id first
  std::vector<std::vector<CrossingId>> order;        // per edge, from edge.u towards edge.v

  static CrossingPlan empty(const Graph& g) {
    CrossingPlan p;
    p.order.assign(static_cast<size_t>(g.num_edges()), {});
    return p;
  }

  int num_crossings() const noexcept { return static_cast<int>(crossings.size()); }

  /// Appends a crossing at the far end of both edges' current orders.
  CrossingId add_crossing(EdgeId e, EdgeId f) {
    const CrossingId id = num_crossings();
    crossings.emplace_back(std::min(e, f), std::max(e, f));
    order[static_cast<size_t>(e)].push_back(id);
    order[static_cast<size_t>(f)].push_back(id);
    return id;
  }

  friend bool operator==(const CrossingPlan&, const CrossingPlan&) = default;
};

/// Returns a description of the first defect, or nullopt if `plan` is
/// well-formed for `g`.
inline std::optional<std::string> plan_defect(const Graph& g, const CrossingPlan& plan) {
  const int m = g.num_edges();
  if (static_cast<int>(plan.order.size()) != m)
    return "plan has orders for " + std::to_string(plan.order.size()) + " edges, graph has " +
           std::to_string(m);
  const int c = plan.num_crossings();
  std::vector<int> seen(static_cast<size_t>(c), 0);
  for (int i = 0; i < c; ++i) {
    auto [e, f] = plan.crossings[i];
    if (e < 0 || f < 0 || e >= m || f >= m)
      return "crossing " + std::to_string(i) + " references an unknown edge";
    if (e == f) return "crossing " + std::to_string(i) + " pairs an edge with itself";
  }
  for (int e = 0; e < m; ++e) {
    for (CrossingId id : plan.order[e]) {
      if (id < 0 || id >= c) return "edge " + std::to_string(e) + " lists unknown crossing";
      auto [a, b] = plan.crossings[id];
      if (a != e && b != e)
        return "crossing " + std::to_string(id) + " listed on edge " + std::to_string(e) +
               " which it does not involve";
      ++seen[id];
    }
  }
  for (int i = 0; i < c; ++i)
    if (seen[i] != 2)
      return "crossing " + std::to_string(i) + " appears " + std::to_string(seen[i]) +
             " times in the per-edge orders (expected 2)";
  return std::nullopt;
}

/// Crossing-incidence per edge (a crossing of e with itself is impossible in a
/// well-formed plan, so this equals order[e].size()).
inline std::vector<int> crossing_counts(const CrossingPlan& plan) {
  std::vector<int> counts;
  counts.reserve(plan.order.size());
  for (const auto& o : plan.order) counts.push_back(static_cast<int>(o.size()));
  return counts;
}

/// Planarization as a multigraph: dummy vertex n + c for crossing c.
struct Planarization {
  int original_vertices = 0;
  int num_vertices = 0;
  std::vector<Edge> edges;         // may contain parallel edges
  std::vector<EdgeId> source_edge; // original edge of each segment

  Graph simple() const { return Graph::from_edges_simplified(num_vertices, edges); }
};

inline Planarization planarize(const Graph& g, const CrossingPlan& plan) {
  if (auto defect = plan_defect(g, plan)) throw std::invalid_argument("malformed plan: " + *defect);
  Planarization p;
  const int n = g.num_vertices();
  p.original_vertices = n;
  p.num_vertices = n + plan.num_crossings();
  p.edges.reserve(static_cast<size_t>(g.num_edges()) + 2 * plan.crossings.size());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    Vertex prev = g.edge(e).u;
    for (CrossingId c : plan.order[e]) {
      p.edges.push_back({prev, n + c});
      p.source_edge.push_back(e);
      prev = n + c;
    }
    p.edges.push_back({prev, g.edge(e).v});
    p.source_edge.push_back(e);
  }
  return p;
}

/// Renumbers crossings into lexicographic order of (edge pair, position along
/// the first edge, position along the second edge). Two plans describing the
/// same drawing become byte-identical after this.
inline CrossingPlan canonical_plan(const CrossingPlan& plan) {
  const int c = plan.num_crossings();
  std::vector<std::pair<int, int>> pos(static_cast<size_t>(c), {-1, -1});
  for (size_t e = 0; e < plan.order.size(); ++e)
    for (size_t i = 0; i < plan.order[e].size(); ++i) {
      CrossingId id = plan.order[e][i];
      if (static_cast<size_t>(plan.crossings[id].first) == e && pos[id].first < 0)
        pos[id].first = static_cast<int>(i);
      else
        pos[id].second = static_cast<int>(i);
    }
  std::vector<int> idx(static_cast<size_t>(c));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return std::tie(plan.crossings[a], pos[a]) < std::tie(plan.crossings[b], pos[b]);
  });
  std::vector<int> renum(static_cast<size_t>(c));
  CrossingPlan out;
  for (int i = 0; i < c; ++i) {
    renum[idx[i]] = i;
    out.crossings.push_back(plan.crossings[idx[i]]);
  }
  out.order = plan.order;
  for (auto& o : out.order)
    for (auto& id : o) id = renum[id];
  return out;
}

}  // namespace lcr
