#pragma once

// Verification and transport of crossing plans.
//
// Acceptance is one-sided: a verified plan certifies lcr(g) <= k, a rejected
// plan says nothing about g. Crossings are not distinguished from touchings at
// dummy vertices; a planar planarization can only lose crossings when turned
// into a drawing, so planarity of the planarization is enough.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcr/crossing_plan.hpp"
#include "lcr/graph.hpp"
#include "lcr/planarity.hpp"
#include "lcr/transforms.hpp"

namespace lcr {

struct VerifyResult {
  bool accepted = false;
  std::string reason;  // first failing condition when rejected

  explicit operator bool() const noexcept { return accepted; }
};

inline VerifyResult verify(const Graph& g, int k, const CrossingPlan& plan) {
  if (auto defect = plan_defect(g, plan)) return {false, "malformed plan: " + *defect};
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const int c = static_cast<int>(plan.order[e].size());
    if (c > k)
      return {false, "edge {" + std::to_string(g.edge(e).u) + "," + std::to_string(g.edge(e).v) +
                         "} has " + std::to_string(c) + " crossings, limit " + std::to_string(k)};
  }
  const Planarization p = planarize(g, plan);
  if (!is_planar_edges(p.num_vertices, p.edges)) return {false, "planarization nonplanar"};
  return {true, "accepted"};
}

struct CrossingCounts {
  std::vector<int> per_edge;
  int max = 0;
};

inline CrossingCounts crossings_per_edge(const Graph& g, const CrossingPlan& plan) {
  if (auto defect = plan_defect(g, plan)) throw std::invalid_argument("malformed plan: " + *defect);
  CrossingCounts out;
  out.per_edge = crossing_counts(plan);
  for (int c : out.per_edge) out.max = std::max(out.max, c);
  return out;
}

/// Carries a 1-planar plan of G_k back to a plan of G with at most k crossings
/// per edge. A path crossing itself forms a loop; the loop is cut away
/// together with every crossing on it before the segments are concatenated.
inline CrossingPlan project_subdivided(const SubdivisionMap& map, const CrossingPlan& sub_plan) {
  const Graph& gk = map.subdivided;
  const Graph& g = map.original;
  if (auto res = verify(gk, 1, sub_plan); !res)
    throw std::invalid_argument("project_subdivided: plan does not verify on G_k: " + res.reason);
  if (map.k == 1) return sub_plan;

  const int c = sub_plan.num_crossings();
  std::vector<char> dropped(static_cast<size_t>(c), 0);
  // Position of each crossing's occurrence along original edges.
  auto segment_ids = [&](EdgeId e) {
    std::vector<EdgeId> segs;
    const auto& path = map.paths[e];
    for (size_t i = 0; i + 1 < path.size(); ++i) segs.push_back(*gk.edge_id(path[i], path[i + 1]));
    return segs;
  };
  auto crossing_on = [&](EdgeId seg) -> CrossingId {
    return sub_plan.order[seg].empty() ? -1 : sub_plan.order[seg].front();
  };

  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto segs = segment_ids(e);
    for (size_t i = 0; i < segs.size(); ++i) {
      CrossingId x = crossing_on(segs[i]);
      if (x < 0 || dropped[x]) continue;
      auto [s1, s2] = sub_plan.crossings[x];
      if (map.segment_owner[s1] != map.segment_owner[s2]) continue;
      const size_t j = static_cast<size_t>(
          std::max(map.segment_position[s1], map.segment_position[s2]));
      for (size_t t = i; t <= j; ++t) {
        CrossingId y = crossing_on(segs[t]);
        if (y >= 0) dropped[y] = 1;
      }
      i = j;
    }
  }

  CrossingPlan out = CrossingPlan::empty(g);
  std::vector<CrossingId> renum(static_cast<size_t>(c), -1);
  for (CrossingId x = 0; x < c; ++x) {
    if (dropped[x]) continue;
    auto [s1, s2] = sub_plan.crossings[x];
    renum[x] = out.num_crossings();
    EdgeId a = map.segment_owner[s1], b = map.segment_owner[s2];
    out.crossings.emplace_back(std::min(a, b), std::max(a, b));
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    for (EdgeId seg : segment_ids(e)) {
      CrossingId x = crossing_on(seg);
      if (x >= 0 && !dropped[x]) out.order[e].push_back(renum[x]);
    }
  return out;
}

}  // namespace lcr
