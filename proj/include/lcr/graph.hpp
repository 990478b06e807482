#pragma once

// Simple undirected graphs in canonical form, edge-list parsing, and the
// structural helpers (low-degree stripping, cover approximation, twin
// classes, structure predicates) shared by every other header.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lcr {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Error raised when an edge-list document cannot be turned into a Graph.
/// `line` is 1-based; 0 means the problem is not tied to a specific line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Simple undirected graph on vertices 0..n-1. Edges are stored with the
/// smaller endpoint first and sorted; adjacency is CSR with sorted rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), offsets_(static_cast<size_t>(n) + 1, 0) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
  }

  /// Builds the canonical graph. Loops, duplicates, and out-of-range ids throw.
  static Graph from_edges(int n, std::vector<Edge> edges) {
    Graph g(n);
    for (auto& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
        throw std::invalid_argument("vertex id out of range in edge {" + std::to_string(e.u) +
                                    "," + std::to_string(e.v) + "}");
      if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
      e = make_edge(e.u, e.v);
    }
    if (!std::is_sorted(edges.begin(), edges.end())) std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
      throw std::invalid_argument("duplicate edge {" + std::to_string(dup->u) + "," +
                                  std::to_string(dup->v) + "}");
    g.edges_ = std::move(edges);
    g.build_adjacency();
    return g;
  }

  /// Same as from_edges but silently drops loops and repeated edges.
  static Graph from_edges_simplified(int n, std::vector<Edge> edges) {
    std::erase_if(edges, [](const Edge& e) { return e.u == e.v; });
    for (auto& e : edges) e = make_edge(e.u, e.v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return from_edges(n, std::move(edges));
  }

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[static_cast<size_t>(id)]; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }

  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const {
    if (a == b) return std::nullopt;
    const Edge key = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency() {
    offsets_.assign(static_cast<size_t>(n_) + 1, 0);
    for (const auto& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    adj_.assign(edges_.size() * 2, 0);
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    // Sorted edge order fills every row in increasing neighbor order.
    for (const auto& e : edges_) {
      adj_[fill[e.u]++] = e.v;
      adj_[fill[e.v]++] = e.u;
    }
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> adj_;
};

// ---------------------------------------------------------------------------
// Edge-list text format: "n m" then m lines "u v".

inline Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++line_no;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      if (line[first] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_content_line(header)) throw ParseError(0, "empty document, expected \"n m\" header");
  long long n = -1, m = -1;
  {
    std::istringstream hs(header);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra))
      throw ParseError(line_no, "malformed header, expected \"n m\"");
    if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
    if (n > (1LL << 30) || m > (1LL << 30)) throw ParseError(line_no, "header counts too large");
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  std::vector<int> line_of;
  line_of.reserve(static_cast<size_t>(m));
  std::string row;
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(row))
      throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                        std::to_string(i));
    std::istringstream rs(row);
    long long a = 0, b = 0;
    std::string extra;
    if (!(rs >> a >> b) || (rs >> extra)) throw ParseError(line_no, "malformed edge line");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw ParseError(line_no, "vertex id out of range");
    if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    edges.push_back(make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)));
    line_of.push_back(line_no);
  }
  if (next_content_line(row)) throw ParseError(line_no, "unexpected content after edge list");

  std::vector<int> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return edges[x] < edges[y]; });
  for (size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]])
      throw ParseError(line_of[order[i]], "duplicate edge {" + std::to_string(edges[order[i]].u) +
                                              "," + std::to_string(edges[order[i]].v) + "}");
  }
  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

inline std::string write_graph(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Small constructors used by tests, generators and the CLI.

inline Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  return Graph::from_edges(n, std::move(es));
}

/// K_{a,b} with the first side on 0..a-1.
inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) es.push_back({i, a + j});
  return Graph::from_edges(a + b, std::move(es));
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back(make_edge(i, (i + 1) % n));
  return Graph::from_edges(n, std::move(es));
}

inline Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph::from_edges(n, std::move(es));
}

/// Uniform random recursive tree: vertex i > 0 hangs below a uniform earlier vertex.
inline Graph random_tree(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.push_back({std::uniform_int_distribution<int>(0, i - 1)(rng), i});
  return Graph::from_edges(n, std::move(es));
}

/// Vertex-induced subgraph on `keep` (renumbered in the given order).
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;  // new id -> old id
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> map(static_cast<size_t>(g.num_vertices()), -1);
  for (size_t i = 0; i < keep.size(); ++i) map[keep[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (const auto& e : g.edges())
    if (map[e.u] >= 0 && map[e.v] >= 0) es.push_back(make_edge(map[e.u], map[e.v]));
  return {Graph::from_edges(static_cast<int>(keep.size()), std::move(es)),
          std::vector<Vertex>(keep.begin(), keep.end())};
}

/// G - X, keeping the remaining vertices in increasing id order.
inline InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(static_cast<size_t>(g.num_vertices()), 0);
  for (Vertex v : removed) gone.at(static_cast<size_t>(v)) = 1;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

inline int count_components(const Graph& g) {
  std::vector<int> parent(static_cast<size_t>(g.num_vertices()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = g.num_vertices();
  for (const auto& e : g.edges()) {
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

// ---------------------------------------------------------------------------
// Degree <= 1 stripping. Leaves and isolated vertices never affect lcr.

struct StripResult {
  Graph graph;
  std::vector<Vertex> removed;      // original ids, in removal order
  std::vector<Vertex> to_original;  // kept vertex new id -> original id
};

inline StripResult strip_low_degree(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> deg(static_cast<size_t>(n));
  std::vector<char> gone(static_cast<size_t>(n), 0);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) {
      queue.push_back(v);
      gone[v] = 1;
    }
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (gone[w]) continue;
      if (--deg[w] <= 1) {
        gone[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n; ++v)
    if (!gone[v]) keep.push_back(v);
  auto sub = induced_subgraph(g, keep);
  return {std::move(sub.graph), std::move(queue), std::move(sub.to_original)};
}

/// Both endpoints of a greedy maximal matching taken in canonical edge order.
/// Sorted output; size is at most twice the minimum vertex cover.
inline std::vector<Vertex> approx_vertex_cover(const Graph& g) {
  std::vector<char> used(static_cast<size_t>(g.num_vertices()), 0);
  std::vector<Vertex> cover;
  for (const auto& e : g.edges()) {
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    cover.push_back(e.u);
    cover.push_back(e.v);
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

inline bool is_vertex_cover(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> in(static_cast<size_t>(g.num_vertices()), 0);
  for (Vertex v : s) in.at(static_cast<size_t>(v)) = 1;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return in[e.u] || in[e.v]; });
}

// ---------------------------------------------------------------------------
// Twin classes.

enum class TwinKind { true_twin, false_twin };

struct TwinPartition {
  std::vector<std::vector<Vertex>> classes;  // each sorted; classes ordered by min vertex
  std::vector<TwinKind> kind;
  std::vector<int> class_of;                 // vertex -> class index

  int diversity() const noexcept { return static_cast<int>(classes.size()); }
};

namespace detail {

inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Groups vertices whose neighborhood keys (open, or closed when `closed`)
// coincide. Hash first, exact comparison on ties.
inline std::vector<std::vector<Vertex>> group_by_neighborhood(const Graph& g,
                                                              std::span<const Vertex> vs,
                                                              bool closed) {
  auto key_hash = [&](Vertex v) {
    uint64_t h = 0;
    bool placed = !closed;
    for (Vertex w : g.neighbors(v)) {
      if (!placed && w > v) {
        h = mix64(h ^ static_cast<uint64_t>(v));
        placed = true;
      }
      h = mix64(h ^ static_cast<uint64_t>(w));
    }
    if (!placed) h = mix64(h ^ static_cast<uint64_t>(v));
    return h ^ (static_cast<uint64_t>(g.degree(v)) << 1);
  };
  auto key_vec = [&](Vertex v) {
    std::vector<Vertex> k(g.neighbors(v).begin(), g.neighbors(v).end());
    if (closed) k.insert(std::upper_bound(k.begin(), k.end(), v), v);
    return k;
  };
  std::vector<std::pair<uint64_t, Vertex>> keyed;
  keyed.reserve(vs.size());
  for (Vertex v : vs) keyed.emplace_back(key_hash(v), v);
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::vector<Vertex>> groups;
  for (size_t i = 0; i < keyed.size();) {
    size_t j = i;
    while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
    if (j - i == 1) {
      groups.push_back({keyed[i].second});
    } else {
      // Hash bucket: split by exact key.
      std::vector<std::pair<std::vector<Vertex>, Vertex>> exact;
      for (size_t t = i; t < j; ++t) exact.emplace_back(key_vec(keyed[t].second), keyed[t].second);
      std::sort(exact.begin(), exact.end());
      for (size_t a = 0; a < exact.size();) {
        size_t b = a;
        std::vector<Vertex> grp;
        while (b < exact.size() && exact[b].first == exact[a].first) grp.push_back(exact[b++].second);
        groups.push_back(std::move(grp));
        a = b;
      }
    }
    i = j;
  }
  return groups;
}

}  // namespace detail

/// Coarsest twin partition. True twins use closed neighborhoods, false twins
/// open ones; singletons are reported as false-twin classes.
inline TwinPartition twin_partition(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Vertex> all(static_cast<size_t>(n));
  std::iota(all.begin(), all.end(), 0);

  TwinPartition tp;
  std::vector<std::pair<std::vector<Vertex>, TwinKind>> found;
  std::vector<Vertex> rest;
  for (auto& grp : detail::group_by_neighborhood(g, all, /*closed=*/true)) {
    if (grp.size() >= 2) {
      found.emplace_back(std::move(grp), TwinKind::true_twin);
    } else {
      rest.push_back(grp.front());
    }
  }
  for (auto& grp : detail::group_by_neighborhood(g, rest, /*closed=*/false))
    found.emplace_back(std::move(grp), TwinKind::false_twin);
  for (auto& f : found) std::sort(f.first.begin(), f.first.end());
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first.front() < b.first.front(); });
  tp.class_of.assign(static_cast<size_t>(n), -1);
  for (auto& [cls, kind] : found) {
    for (Vertex v : cls) tp.class_of[v] = static_cast<int>(tp.classes.size());
    tp.classes.push_back(std::move(cls));
    tp.kind.push_back(kind);
  }
  return tp;
}

// ---------------------------------------------------------------------------
// Parameters.

struct ParamReport {
  int n = 0;
  int m = 0;
  int min_degree = 0;
  int max_degree = 0;
  int components = 0;
  int feedback_edge_number = 0;
  int neighborhood_diversity = 0;
  int approx_vertex_cover = 0;
};

inline ParamReport param_report(const Graph& g) {
  ParamReport r;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  if (r.n > 0) {
    r.min_degree = r.max_degree = g.degree(0);
    for (Vertex v = 1; v < r.n; ++v) {
      r.min_degree = std::min(r.min_degree, g.degree(v));
      r.max_degree = std::max(r.max_degree, g.degree(v));
    }
  }
  r.components = count_components(g);
  r.feedback_edge_number = r.m - r.n + r.components;
  r.neighborhood_diversity = twin_partition(g).diversity();
  r.approx_vertex_cover = static_cast<int>(approx_vertex_cover(g).size());
  return r;
}

// ---------------------------------------------------------------------------
// Structure predicates used by the gadget certificates.

enum class Property { acyclic, path_forest, dominating_set, twin_cover, unicyclic };

inline Property parse_property(std::string_view name) {
  if (name == "acyclic") return Property::acyclic;
  if (name == "path-forest") return Property::path_forest;
  if (name == "dominating-set") return Property::dominating_set;
  if (name == "twin-cover") return Property::twin_cover;
  if (name == "unicyclic") return Property::unicyclic;
  throw std::invalid_argument("unknown property '" + std::string(name) + "'");
}

inline std::string_view property_name(Property p) {
  switch (p) {
    case Property::acyclic: return "acyclic";
    case Property::path_forest: return "path-forest";
    case Property::dominating_set: return "dominating-set";
    case Property::twin_cover: return "twin-cover";
    case Property::unicyclic: return "unicyclic";
  }
  return "?";
}

struct StructureCheck {
  bool holds = false;
  std::string explanation;
};

namespace detail {

// Returns the vertex sequence of some cycle, or empty if g is a forest.
inline std::vector<Vertex> find_cycle(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> parent(static_cast<size_t>(n), -2), depth(static_cast<size_t>(n), 0);
  std::vector<std::pair<Vertex, int>> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (parent[root] != -2) continue;
    parent[root] = -1;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      auto nb = g.neighbors(v);
      if (idx == static_cast<int>(nb.size())) {
        stack.pop_back();
        continue;
      }
      Vertex w = nb[idx++];
      if (w == parent[v]) continue;
      if (parent[w] == -2) {
        parent[w] = v;
        depth[w] = depth[v] + 1;
        stack.push_back({w, 0});
      } else if (depth[w] < depth[v]) {
        std::vector<Vertex> cyc;
        for (Vertex x = v; x != w; x = parent[x]) cyc.push_back(x);
        cyc.push_back(w);
        return cyc;
      }
    }
  }
  return {};
}

inline std::string join(std::span<const Vertex> vs, std::span<const Vertex> labels = {}) {
  std::string s;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(labels.empty() ? vs[i] : labels[vs[i]]);
  }
  return s;
}

}  // namespace detail

/// `set` is the dominating set or twin cover, ignored for the other properties.
/// Explanations name vertex v as labels[v] when labels are given.
inline StructureCheck check_structure(const Graph& g, Property prop,
                                      std::span<const Vertex> set = {},
                                      std::span<const Vertex> labels = {}) {
  const int n = g.num_vertices();
  auto label = [&](Vertex v) { return std::to_string(labels.empty() ? v : labels[v]); };
  for (Vertex v : set)
    if (v < 0 || v >= n) throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");

  switch (prop) {
    case Property::acyclic: {
      auto cyc = detail::find_cycle(g);
      if (cyc.empty()) return {true, "graph is a forest"};
      return {false, "cycle: " + detail::join(cyc, labels)};
    }
    case Property::path_forest: {
      for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) > 2)
          return {false, "vertex " + label(v) + " has degree " + std::to_string(g.degree(v))};
      auto cyc = detail::find_cycle(g);
      if (!cyc.empty()) return {false, "cycle: " + detail::join(cyc, labels)};
      return {true, "disjoint union of paths"};
    }
    case Property::unicyclic: {
      const int cyclomatic = g.num_edges() - n + count_components(g);
      if (cyclomatic == 1) return {true, "exactly one cycle: " + detail::join(detail::find_cycle(g), labels)};
      return {false, "cycle space has dimension " + std::to_string(cyclomatic)};
    }
    case Property::dominating_set: {
      std::vector<char> dom(static_cast<size_t>(n), 0);
      for (Vertex d : set) {
        dom[d] = 1;
        for (Vertex w : g.neighbors(d)) dom[w] = 1;
      }
      for (Vertex v = 0; v < n; ++v)
        if (!dom[v]) return {false, "vertex " + label(v) + " is not dominated"};
      return {true, "every vertex dominated"};
    }
    case Property::twin_cover: {
      std::vector<char> in(static_cast<size_t>(n), 0);
      for (Vertex v : set) in[v] = 1;
      std::vector<int> comp(static_cast<size_t>(n), -1);
      auto closed_equal = [&](Vertex a, Vertex b) {
        auto na = g.neighbors(a), nb = g.neighbors(b);
        if (na.size() != nb.size()) return false;
        if (!g.has_edge(a, b)) return false;
        // N[a] = N[b]  <=>  N(a) - {b} = N(b) - {a}
        size_t i = 0, j = 0;
        while (i < na.size() || j < nb.size()) {
          if (i < na.size() && na[i] == b) { ++i; continue; }
          if (j < nb.size() && nb[j] == a) { ++j; continue; }
          if (i == na.size() || j == nb.size() || na[i] != nb[j]) return false;
          ++i;
          ++j;
        }
        return true;
      };
      std::vector<Vertex> stack;
      for (Vertex r = 0; r < n; ++r) {
        if (in[r] || comp[r] >= 0) continue;
        comp[r] = r;
        stack.push_back(r);
        while (!stack.empty()) {
          Vertex v = stack.back();
          stack.pop_back();
          if (v != r && !closed_equal(r, v))
            return {false, "vertices " + label(r) + " and " + label(v) +
                               " share a component of G - S but are not true twins"};
          for (Vertex w : g.neighbors(v))
            if (!in[w] && comp[w] < 0) {
              comp[w] = r;
              stack.push_back(w);
            }
        }
      }
      return {true, "every component of G - S is a class of true twins"};
    }
  }
  throw std::invalid_argument("unknown property");
}

}  // namespace lcr
