#pragma once

// Graph transformations: k-subdivision, spoke attachment, and elimination
// forests (validation plus the lift from G to its k-subdivision).

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcr/graph.hpp"

namespace lcr {

// ---------------------------------------------------------------------------
// k-subdivision

/// G_k together with the path that replaces every original edge. Paths run
/// from edge.u to edge.v and have exactly k edges.
struct SubdivisionMap {
  Graph original;
  Graph subdivided;
  int k = 1;
  std::vector<std::vector<Vertex>> paths;  // indexed by original edge id
  // Per subdivided edge: owning original edge and position 0..k-1 on its path.
  std::vector<EdgeId> segment_owner;
  std::vector<int> segment_position;
};

/// Subdivides each edge k-1 times. Original vertices keep their ids; new ones
/// are numbered in canonical edge order, then by position along the path.
inline SubdivisionMap subdivide(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("subdivide: k must be at least 1");
  const int n = g.num_vertices();
  const int m = g.num_edges();
  SubdivisionMap map;
  map.original = g;
  map.k = k;
  map.paths.resize(static_cast<size_t>(m));
  std::vector<Edge> es;
  es.reserve(static_cast<size_t>(m) * static_cast<size_t>(k));
  Vertex next = n;
  for (EdgeId e = 0; e < m; ++e) {
    auto& path = map.paths[e];
    path.push_back(g.edge(e).u);
    for (int i = 1; i < k; ++i) path.push_back(next++);
    path.push_back(g.edge(e).v);
    for (size_t i = 0; i + 1 < path.size(); ++i) es.push_back(make_edge(path[i], path[i + 1]));
  }
  map.subdivided = Graph::from_edges(next, std::move(es));
  map.segment_owner.assign(static_cast<size_t>(map.subdivided.num_edges()), -1);
  map.segment_position.assign(static_cast<size_t>(map.subdivided.num_edges()), -1);
  for (EdgeId e = 0; e < m; ++e) {
    const auto& path = map.paths[e];
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      EdgeId s = *map.subdivided.edge_id(path[i], path[i + 1]);
      map.segment_owner[s] = e;
      map.segment_position[s] = static_cast<int>(i);
    }
  }
  return map;
}

/// Inverse of subdivide: suppresses every degree-2 vertex with id >= first_new
/// whose neighbors differ, merging its two edges. Used to check round trips.
inline Graph suppress_subdivision_vertices(const Graph& g, Vertex first_new) {
  std::vector<Edge> out;
  std::vector<char> done(static_cast<size_t>(g.num_edges()), 0);
  auto internal = [&](Vertex v) { return v >= first_new && g.degree(v) == 2; };
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (done[e]) continue;
    Edge ed = g.edge(e);
    if (internal(ed.u) && internal(ed.v)) continue;  // picked up from an end
    Vertex start = internal(ed.u) ? ed.v : ed.u;
    Vertex cur = internal(ed.u) ? ed.u : ed.v;
    Vertex prev = start;
    done[e] = 1;
    while (internal(cur)) {
      auto nb = g.neighbors(cur);
      Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
      done[*g.edge_id(cur, nxt)] = 1;
      prev = cur;
      cur = nxt;
    }
    out.push_back(make_edge(start, cur));
  }
  return Graph::from_edges(first_new, std::move(out));
}

// ---------------------------------------------------------------------------
// Spokes

/// Hub vertex plus, per target, the midpoints of its spokes (paths of length 2).
struct SpokeRegistry {
  Vertex hub = -1;
  std::vector<Vertex> targets;
  std::vector<std::vector<Vertex>> midpoints;  // parallel to targets

  int count_for(Vertex target) const {
    auto it = std::find(targets.begin(), targets.end(), target);
    return it == targets.end() ? 0 : static_cast<int>(midpoints[it - targets.begin()].size());
  }
};

/// Adds `count` spokes from an existing vertex `hub` to each target. New
/// midpoints are numbered target by target after the current vertices.
inline std::pair<Graph, SpokeRegistry> attach_spokes_from(const Graph& g, Vertex hub,
                                                          std::span<const Vertex> targets,
                                                          int count) {
  if (targets.empty()) throw std::invalid_argument("attach_spokes: empty target set");
  if (count < 1) throw std::invalid_argument("attach_spokes: spoke count must be positive");
  if (hub < 0 || hub >= g.num_vertices()) throw std::invalid_argument("attach_spokes: bad hub");
  std::vector<Edge> es(g.edges().begin(), g.edges().end());
  SpokeRegistry reg;
  reg.hub = hub;
  Vertex next = g.num_vertices();
  for (Vertex t : targets) {
    if (t < 0 || t >= g.num_vertices() || t == hub)
      throw std::invalid_argument("attach_spokes: bad target " + std::to_string(t));
    reg.targets.push_back(t);
    auto& mids = reg.midpoints.emplace_back();
    for (int i = 0; i < count; ++i) {
      mids.push_back(next);
      es.push_back(make_edge(hub, next));
      es.push_back(make_edge(next, t));
      ++next;
    }
  }
  return {Graph::from_edges(next, std::move(es)), std::move(reg)};
}

/// Adds a new hub r (id n) and `count` spokes from r to every vertex of X.
inline std::pair<Graph, SpokeRegistry> attach_spokes(const Graph& g,
                                                     std::span<const Vertex> targets, int count) {
  if (targets.empty()) throw std::invalid_argument("attach_spokes: empty target set");
  std::vector<Edge> es(g.edges().begin(), g.edges().end());
  Graph with_hub = Graph::from_edges(g.num_vertices() + 1, std::move(es));
  return attach_spokes_from(with_hub, g.num_vertices(), targets, count);
}

// ---------------------------------------------------------------------------
// Elimination forests

/// Rooted forest over the vertex set; parent[v] == -1 marks a root.
struct EliminationForest {
  std::vector<Vertex> parent;

  int size() const noexcept { return static_cast<int>(parent.size()); }
};

struct ForestCheck {
  bool valid = false;
  int height = 0;
  std::string violation;  // first edge without ancestor relation
};

namespace detail {

// Depth (root = 1) of every node; throws when the parent structure has a cycle.
inline std::vector<int> forest_depths(const EliminationForest& f) {
  const int n = f.size();
  std::vector<int> depth(static_cast<size_t>(n), 0);
  std::vector<Vertex> trail;
  for (Vertex v = 0; v < n; ++v) {
    if (depth[v]) continue;
    trail.clear();
    Vertex cur = v;
    while (cur != -1 && depth[cur] == 0) {
      if (cur < -1 || cur >= n) throw std::invalid_argument("elimination forest: parent out of range");
      depth[cur] = -1;  // on the current trail
      trail.push_back(cur);
      cur = f.parent[cur];
      if (cur >= n || cur < -1) throw std::invalid_argument("elimination forest: parent out of range");
    }
    if (cur != -1 && depth[cur] == -1)
      throw std::invalid_argument("elimination forest: parent structure is cyclic");
    int d = cur == -1 ? 0 : depth[cur];
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) depth[*it] = ++d;
  }
  return depth;
}

}  // namespace detail

/// Checks that every edge joins an ancestor/descendant pair. Throws on a
/// cyclic parent structure or a size mismatch.
inline ForestCheck validate_elimination_forest(const Graph& g, const EliminationForest& f) {
  if (f.size() != g.num_vertices())
    throw std::invalid_argument("elimination forest size does not match the graph");
  auto depth = detail::forest_depths(f);
  ForestCheck out;
  out.height = depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
  for (const auto& e : g.edges()) {
    Vertex deep = depth[e.u] >= depth[e.v] ? e.u : e.v;
    Vertex shallow = deep == e.u ? e.v : e.u;
    Vertex cur = deep;
    while (cur != -1 && depth[cur] > depth[shallow]) cur = f.parent[cur];
    if (cur != shallow) {
      out.violation = "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} has no ancestor/descendant relation";
      return out;
    }
  }
  out.valid = true;
  return out;
}

/// Path 0 - 1 - ... - (n-1) as a chain elimination tree (vertex i+1 below i).
inline EliminationForest chain_forest(int n) {
  EliminationForest f;
  f.parent.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) f.parent[i] = i - 1;
  return f;
}

/// Balanced elimination tree of a path given as a vertex sequence, by
/// recursive midpoint splitting; the root's parent is `attach`. The tree height
/// is ceil(log2(len + 1)).
inline void hang_balanced_path(std::span<const Vertex> seq, Vertex attach,
                               std::vector<Vertex>& parent) {
  if (seq.empty()) return;
  const size_t mid = seq.size() / 2;
  parent[seq[mid]] = attach;
  hang_balanced_path(seq.subspan(0, mid), seq[mid], parent);
  hang_balanced_path(seq.subspan(mid + 1), seq[mid], parent);
}

inline int ceil_log2(long long k) {
  int r = 0;
  while ((1LL << r) < k) ++r;
  return r;
}

/// Elimination forest for subdivide(g, k).subdivided of height at most
/// height(f) + ceil(log2 k). For every edge {u, v} with v the descendant, the
/// k-1 internal path vertices hang below v as a balanced tree.
inline EliminationForest lift_elimination_forest(const Graph& g, const EliminationForest& f, int k) {
  auto check = validate_elimination_forest(g, f);
  if (!check.valid) throw std::invalid_argument("lift_elimination_forest: invalid forest: " + check.violation);
  if (k < 1) throw std::invalid_argument("lift_elimination_forest: k must be at least 1");
  auto depth = detail::forest_depths(f);
  const SubdivisionMap map = subdivide(g, k);
  EliminationForest out;
  out.parent.assign(static_cast<size_t>(map.subdivided.num_vertices()), -1);
  std::copy(f.parent.begin(), f.parent.end(), out.parent.begin());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& path = map.paths[e];
    Vertex deeper = depth[g.edge(e).u] >= depth[g.edge(e).v] ? g.edge(e).u : g.edge(e).v;
    std::span<const Vertex> internal(path.data() + 1, path.size() - 2);
    hang_balanced_path(internal, deeper, out.parent);
  }
  return out;
}

}  // namespace lcr
