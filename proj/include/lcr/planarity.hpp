#pragma once

// Planarity testing and Kuratowski subdivision extraction. The test itself is
// Boost's Boyer-Myrvold implementation; this header adapts it to plain edge
// lists and validates the obstruction it reports.

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcr/graph.hpp"

namespace lcr {

enum class ObstructionKind { k5, k33 };

inline std::string_view obstruction_name(ObstructionKind k) {
  return k == ObstructionKind::k5 ? "K5-subdivision" : "K33-subdivision";
}

/// Subdivision of K5 or K3,3 inside a host graph; `edges` are host edge ids.
struct Obstruction {
  ObstructionKind kind = ObstructionKind::k5;
  std::vector<EdgeId> edges;
};

namespace detail {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

// Simple edge list only (no loops, no parallel edges). Returns nullopt when
// planar, otherwise indices into `edges` of a nonplanar subgraph.
inline std::optional<std::vector<int>> boyer_myrvold(int n, std::span<const Edge> edges,
                                                     bool want_obstruction) {
  // Every nonplanar graph has at least 9 edges (K3,3).
  if (edges.size() <= 8) return std::nullopt;
  if (!want_obstruction && n >= 3 && edges.size() > 3 * static_cast<size_t>(n) - 6)
    return std::vector<int>{};
  BoostGraph bg(static_cast<size_t>(n));
  for (size_t i = 0; i < edges.size(); ++i) {
    auto [e, ok] = boost::add_edge(edges[i].u, edges[i].v, bg);
    boost::put(boost::edge_index, bg, e, static_cast<int>(i));
  }
  if (!want_obstruction) {
    if (boost::boyer_myrvold_planarity_test(bg)) return std::nullopt;
    return std::vector<int>{};
  }
  std::vector<boost::graph_traits<BoostGraph>::edge_descriptor> kur;
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kur));
  if (planar) return std::nullopt;
  std::vector<int> ids;
  ids.reserve(kur.size());
  for (auto& e : kur) ids.push_back(boost::get(boost::edge_index, bg, e));
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

// Drops edges with a degree-1 endpoint until none remain.
inline std::vector<int> strip_pendant_edges(std::span<const Edge> edges, std::vector<int> ids) {
  std::map<Vertex, int> deg;
  bool changed = true;
  while (changed) {
    changed = false;
    deg.clear();
    for (int i : ids) {
      ++deg[edges[i].u];
      ++deg[edges[i].v];
    }
    std::vector<int> kept;
    for (int i : ids) {
      if (deg[edges[i].u] <= 1 || deg[edges[i].v] <= 1) {
        changed = true;
      } else {
        kept.push_back(i);
      }
    }
    ids = std::move(kept);
  }
  return ids;
}

// Checks that the edge subset is a subdivision of K5 or K3,3.
inline std::optional<ObstructionKind> classify_subdivision(std::span<const Edge> edges,
                                                           std::span<const int> ids) {
  std::map<Vertex, std::vector<std::pair<Vertex, int>>> inc;
  for (int i : ids) {
    inc[edges[i].u].push_back({edges[i].v, i});
    inc[edges[i].v].push_back({edges[i].u, i});
  }
  std::vector<Vertex> branch;
  for (auto& [v, list] : inc) {
    if (list.size() == 2) continue;
    if (list.size() < 2) return std::nullopt;
    branch.push_back(v);
  }
  const bool k5 = branch.size() == 5;
  const bool k33 = branch.size() == 6;
  if (!k5 && !k33) return std::nullopt;
  const size_t want_deg = k5 ? 4 : 3;
  for (Vertex b : branch)
    if (inc[b].size() != want_deg) return std::nullopt;

  std::map<int, char> used;
  std::vector<std::pair<Vertex, Vertex>> contracted;
  for (Vertex b : branch) {
    for (auto [next, eid] : inc[b]) {
      if (used[eid]) continue;
      Vertex prev = b, cur = next;
      used[eid] = 1;
      while (inc[cur].size() == 2) {
        auto& l = inc[cur];
        auto step = (l[0].second == eid) ? l[1] : l[0];
        eid = step.second;
        if (used[eid]) return std::nullopt;
        used[eid] = 1;
        prev = cur;
        cur = step.first;
      }
      (void)prev;
      if (cur == b) return std::nullopt;
      contracted.emplace_back(std::min(b, cur), std::max(b, cur));
    }
  }
  if (used.size() != ids.size()) return std::nullopt;  // cycles without branch vertices
  std::sort(contracted.begin(), contracted.end());
  if (std::adjacent_find(contracted.begin(), contracted.end()) != contracted.end())
    return std::nullopt;
  if (k5) {
    if (contracted.size() != 10) return std::nullopt;
    return ObstructionKind::k5;
  }
  if (contracted.size() != 9) return std::nullopt;
  // Two-color the contracted graph: must be K3,3.
  std::map<Vertex, int> color;
  color[branch[0]] = 0;
  for (int pass = 0; pass < 6; ++pass)
    for (auto [a, b] : contracted) {
      if (color.count(a) && !color.count(b)) color[b] = 1 - color[a];
      if (color.count(b) && !color.count(a)) color[a] = 1 - color[b];
    }
  int side0 = 0;
  for (Vertex b : branch) {
    if (!color.count(b)) return std::nullopt;
    side0 += color[b] == 0;
  }
  for (auto [a, b] : contracted)
    if (color[a] == color[b]) return std::nullopt;
  if (side0 != 3) return std::nullopt;
  return ObstructionKind::k33;
}

}  // namespace detail

/// Planarity of an arbitrary edge list (loops and parallel edges are
/// ignored, they never change planarity).
inline bool is_planar_edges(int n, std::span<const Edge> edges) {
  std::vector<Edge> simple;
  simple.reserve(edges.size());
  for (const auto& e : edges)
    if (e.u != e.v) simple.push_back(make_edge(e.u, e.v));
  std::sort(simple.begin(), simple.end());
  simple.erase(std::unique(simple.begin(), simple.end()), simple.end());
  return !detail::boyer_myrvold(n, simple, false).has_value();
}

inline bool is_planar(const Graph& g) {
  return !detail::boyer_myrvold(g.num_vertices(), g.edges(), false).has_value();
}

/// Kuratowski subdivision for a simple edge list, as indices into `edges`.
/// Returns nullopt when the edge list is planar.
inline std::optional<Obstruction> find_obstruction(int n, std::span<const Edge> edges) {
  auto raw = detail::boyer_myrvold(n, edges, true);
  if (!raw) return std::nullopt;
  auto ids = detail::strip_pendant_edges(edges, std::move(*raw));
  auto kind = detail::classify_subdivision(edges, ids);
  if (!kind) {
    // Fall back to edge-wise minimisation; any edge-minimal nonplanar
    // subgraph is a Kuratowski subdivision.
    if (ids.empty()) {
      ids.resize(edges.size());
      std::iota(ids.begin(), ids.end(), 0);
    }
    for (size_t pos = 0; pos < ids.size();) {
      std::vector<Edge> trial;
      for (size_t j = 0; j < ids.size(); ++j)
        if (j != pos) trial.push_back(edges[ids[j]]);
      if (!detail::boyer_myrvold(n, trial, false)) {
        ++pos;
      } else {
        ids.erase(ids.begin() + static_cast<long>(pos));
      }
    }
    kind = detail::classify_subdivision(edges, ids);
    if (!kind) throw std::logic_error("obstruction extraction failed to produce a subdivision");
  }
  return Obstruction{*kind, std::move(ids)};
}

/// Kuratowski obstruction of a nonplanar graph; throws on planar input.
inline Obstruction kuratowski(const Graph& g) {
  auto obs = find_obstruction(g.num_vertices(), g.edges());
  if (!obs) throw std::invalid_argument("kuratowski called on a planar graph");
  return *obs;
}

/// True iff `ids` (host edge ids) form a K5 or K3,3 subdivision of kind `kind`.
inline bool is_valid_obstruction(const Graph& g, const Obstruction& obs) {
  for (EdgeId e : obs.edges)
    if (e < 0 || e >= g.num_edges()) return false;
  auto kind = detail::classify_subdivision(g.edges(), obs.edges);
  return kind && *kind == obs.kind;
}

}  // namespace lcr
