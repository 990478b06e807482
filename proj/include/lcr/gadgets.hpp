#pragma once

// Instance generators for the hardness constructions, their structural
// certificates, and forward witnesses (solution of the source problem ->
// verified crossing plan).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lcr/crossing_plan.hpp"
#include "lcr/graph.hpp"
#include "lcr/oracle.hpp"
#include "lcr/planarity.hpp"
#include "lcr/transforms.hpp"
#include "lcr/ubp.hpp"
#include "lcr/witness.hpp"

namespace lcr {

struct GadgetInstance {
  std::string family;  // two-sided | bandwidth | gap | ubp-basic | ubp-domination | ubp-twincover
  Graph graph;
  int k = 0;
  std::vector<std::pair<std::string, Vertex>> names;
  std::vector<SpokeRegistry> spokes;
  std::map<std::string, long long> params;
  std::vector<long long> items;                    // ubp families
  std::vector<Vertex> layer_x, layer_y;            // source layers
  std::vector<Vertex> cycle;                       // ubp: C in cyclic order from v1
  std::vector<std::vector<Vertex>> item_vertices;  // ubp: path or clique of each item
  std::optional<EliminationForest> forest;         // bandwidth, when a forest was supplied

  Vertex name(std::string_view key) const {
    for (const auto& [n, v] : names)
      if (n == key) return v;
    throw std::out_of_range("gadget has no vertex named " + std::string(key));
  }
  long long param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw std::out_of_range("gadget has no parameter " + key);
    return it->second;
  }

  friend bool operator==(const GadgetInstance& a, const GadgetInstance& b) {
    auto same_spokes = [](const std::vector<SpokeRegistry>& x, const std::vector<SpokeRegistry>& y) {
      if (x.size() != y.size()) return false;
      for (size_t i = 0; i < x.size(); ++i)
        if (x[i].hub != y[i].hub || x[i].targets != y[i].targets || x[i].midpoints != y[i].midpoints)
          return false;
      return true;
    };
    auto same_forest = [](const std::optional<EliminationForest>& x, const std::optional<EliminationForest>& y) {
      if (x.has_value() != y.has_value()) return false;
      return !x || x->parent == y->parent;
    };
    return a.family == b.family && a.graph == b.graph && a.k == b.k && a.names == b.names &&
           same_spokes(a.spokes, b.spokes) && a.params == b.params && a.items == b.items &&
           a.layer_x == b.layer_x && a.layer_y == b.layer_y && a.cycle == b.cycle &&
           a.item_vertices == b.item_vertices && same_forest(a.forest, b.forest);
  }
};

/// 2-colouring classes (class of vertex 0 first). Throws when g is not bipartite.
inline std::pair<std::vector<Vertex>, std::vector<Vertex>> bipartition(const Graph& g) {
  std::vector<int> color(static_cast<size_t>(g.num_vertices()), -1);
  std::vector<Vertex> stack;
  for (Vertex r = 0; r < g.num_vertices(); ++r) {
    if (color[r] >= 0) continue;
    color[r] = 0;
    stack.push_back(r);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          throw std::invalid_argument("graph is not bipartite (odd cycle through " + std::to_string(v) +
                                      "," + std::to_string(w) + ")");
        }
      }
    }
  }
  std::pair<std::vector<Vertex>, std::vector<Vertex>> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) (color[v] == 0 ? out.first : out.second).push_back(v);
  return out;
}

inline bool is_tree(const Graph& g) {
  return g.num_vertices() >= 1 && g.num_edges() == g.num_vertices() - 1 && count_components(g) == 1;
}

// ---------------------------------------------------------------------------
// Two-sided k-planarity

/// Hub u_X with km+1 spokes to every x in X, then hub u_Y with
/// k(l1 n_X + m)+1 spokes to every y in Y and to u_X.
inline GadgetInstance gen_two_sided(const Graph& g, std::span<const Vertex> X, std::span<const Vertex> Y, int k) {
  if (k < 1) throw std::invalid_argument("gen_two_sided: k must be at least 1");
  detail::check_layers(g, X, Y);
  if (X.empty() || Y.empty()) throw std::invalid_argument("gen_two_sided: both layers must be nonempty");
  const long long m = g.num_edges();
  const long long nx = static_cast<long long>(X.size());
  const long long l1 = k * m + 1;
  const long long l2 = k * (l1 * nx + m) + 1;
  if (l2 > 50'000'000) throw std::invalid_argument("gen_two_sided: spoke count too large");

  auto [g1, reg_x] = attach_spokes(g, X, static_cast<int>(l1));
  const Vertex ux = reg_x.hub;
  std::vector<Vertex> targets(Y.begin(), Y.end());
  targets.push_back(ux);
  auto [g2, reg_y] = attach_spokes(g1, targets, static_cast<int>(l2));

  GadgetInstance inst;
  inst.family = "two-sided";
  inst.graph = std::move(g2);
  inst.k = k;
  inst.names = {{"uX", ux}, {"uY", reg_y.hub}};
  inst.spokes = {std::move(reg_x), std::move(reg_y)};
  inst.params = {{"n_source", g.num_vertices()}, {"m", m}, {"n_X", nx},
                 {"n_Y", static_cast<long long>(Y.size())}, {"l1", l1}, {"l2", l2}};
  inst.layer_x.assign(X.begin(), X.end());
  inst.layer_y.assign(Y.begin(), Y.end());
  return inst;
}

/// Plan for a two-sided instance from 2-layer orderings of the source: the
/// source is drawn straight-line between two parallel lines, u_X below, u_Y
/// above, and the u_Y-u_X spokes around the side, so no spoke is crossed.
inline CrossingPlan witness_two_sided(const GadgetInstance& inst, std::span<const Vertex> x_order,
                                      std::span<const Vertex> y_order, uint64_t seed = 1) {
  if (inst.family != "two-sided") throw std::invalid_argument("witness_two_sided: not a two-sided instance");
  auto sorted = [](std::span<const Vertex> s) {
    std::vector<Vertex> v(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    return v;
  };
  auto lx = inst.layer_x, ly = inst.layer_y;
  std::sort(lx.begin(), lx.end());
  std::sort(ly.begin(), ly.end());
  if (sorted(x_order) != lx || sorted(y_order) != ly)
    throw std::invalid_argument("witness_two_sided: orderings are not permutations of the layers");

  const int ns = static_cast<int>(inst.param("n_source"));
  std::vector<Edge> src_edges;
  for (const auto& e : inst.graph.edges())
    if (e.u < ns && e.v < ns) src_edges.push_back(e);
  const Graph source = Graph::from_edges(ns, src_edges);
  auto counts = two_layer_crossings(source, x_order, y_order);
  for (size_t i = 0; i < counts.size(); ++i)
    if (counts[i] > inst.k)
      throw std::invalid_argument("witness_two_sided: orderings put " + std::to_string(counts[i]) +
                                  " crossings on an edge, limit " + std::to_string(inst.k));

  std::vector<char> is_x(static_cast<size_t>(ns), 0);
  for (Vertex x : x_order) is_x[x] = 1;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> jitter(0, (1LL << 19) - 1);

  using I128 = __int128;
  struct Cross {
    size_t e, f;
    I128 num, den;  // height of the crossing, num/den in (0,1)
  };
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<long long> pos(static_cast<size_t>(ns), 0);
    for (size_t i = 0; i < x_order.size(); ++i) pos[x_order[i]] = static_cast<long long>(i) * (1LL << 20) + jitter(rng);
    for (size_t i = 0; i < y_order.size(); ++i) pos[y_order[i]] = static_cast<long long>(i) * (1LL << 20) + jitter(rng);
    const size_t m = src_edges.size();
    std::vector<std::pair<long long, long long>> ab(m);  // (x position, y position)
    for (size_t i = 0; i < m; ++i) {
      auto [u, v] = src_edges[i];
      ab[i] = is_x[u] ? std::pair{pos[u], pos[v]} : std::pair{pos[v], pos[u]};
    }
    std::vector<Cross> cr;
    for (size_t i = 0; i < m; ++i)
      for (size_t j = i + 1; j < m; ++j) {
        auto [a1, b1] = ab[i];
        auto [a2, b2] = ab[j];
        if (!((a1 < a2 && b1 > b2) || (a1 > a2 && b1 < b2))) continue;
        I128 num = a2 - a1;
        I128 den = static_cast<I128>(b1 - a1) - (b2 - a2);
        if (den < 0) {
          num = -num;
          den = -den;
        }
        cr.push_back({i, j, num, den});
      }
    // Order along each edge by height; equal heights mean concurrent crossings.
    std::vector<std::vector<size_t>> on(m);
    for (size_t c = 0; c < cr.size(); ++c) {
      on[cr[c].e].push_back(c);
      on[cr[c].f].push_back(c);
    }
    bool degenerate = false;
    auto less = [&](size_t p, size_t q) { return cr[p].num * cr[q].den < cr[q].num * cr[p].den; };
    for (auto& list : on) {
      std::sort(list.begin(), list.end(), less);
      for (size_t t = 1; t < list.size(); ++t)
        if (!less(list[t - 1], list[t])) degenerate = true;
    }
    if (degenerate) continue;

    CrossingPlan plan = CrossingPlan::empty(inst.graph);
    for (const auto& c : cr) {
      EdgeId e = *inst.graph.edge_id(src_edges[c.e].u, src_edges[c.e].v);
      EdgeId f = *inst.graph.edge_id(src_edges[c.f].u, src_edges[c.f].v);
      plan.crossings.emplace_back(std::min(e, f), std::max(e, f));
    }
    for (size_t i = 0; i < m; ++i) {
      EdgeId e = *inst.graph.edge_id(src_edges[i].u, src_edges[i].v);
      auto list = on[i];
      if (!is_x[src_edges[i].u]) std::reverse(list.begin(), list.end());  // walk from the Y end
      for (size_t c : list) plan.order[e].push_back(static_cast<CrossingId>(c));
    }
    plan = canonical_plan(plan);
    if (auto res = verify(inst.graph, inst.k, plan); !res)
      throw std::logic_error("witness_two_sided produced a plan that fails verification: " + res.reason);
    return plan;
  }
  throw std::runtime_error("witness_two_sided: could not find generic positions");
}

/// Subdivide every tree edge once and hang l leaves on every original vertex;
/// k = (l+4)(b-1)/2. Layers are the colour classes of the result. With a
/// supplied elimination forest of T, one of height at most +1 is carried over.
inline GadgetInstance gen_bandwidth_to_two_sided(const Graph& tree, int b, int ell,
                                                 const std::optional<EliminationForest>& forest = std::nullopt) {
  if (!is_tree(tree)) throw std::invalid_argument("gen_bandwidth_to_two_sided: input is not a tree");
  if (b < 1) throw std::invalid_argument("gen_bandwidth_to_two_sided: b must be at least 1");
  if (ell % 2 != 0) throw std::invalid_argument("gen_bandwidth_to_two_sided: l must be even");
  if (ell < 2 * b * b) throw std::invalid_argument("gen_bandwidth_to_two_sided: l must be at least 2b^2");
  const int n = tree.num_vertices();
  const int m = tree.num_edges();
  std::vector<Edge> es;
  for (EdgeId e = 0; e < m; ++e) {
    es.push_back(make_edge(tree.edge(e).u, n + e));
    es.push_back(make_edge(n + e, tree.edge(e).v));
  }
  const Vertex first_leaf = n + m;
  for (Vertex v = 0; v < n; ++v)
    for (int j = 0; j < ell; ++j) es.push_back(make_edge(v, first_leaf + v * ell + j));
  GadgetInstance inst;
  inst.family = "bandwidth";
  inst.graph = Graph::from_edges(first_leaf + n * ell, std::move(es));
  inst.k = (ell + 4) * (b - 1) / 2;
  inst.params = {{"b", b}, {"l", ell}, {"n_tree", n}};
  auto [x, y] = bipartition(inst.graph);
  inst.layer_x = std::move(x);
  inst.layer_y = std::move(y);
  if (forest) {
    auto check = validate_elimination_forest(tree, *forest);
    if (!check.valid) throw std::invalid_argument("gen_bandwidth_to_two_sided: invalid forest: " + check.violation);
    auto depth = detail::forest_depths(*forest);
    EliminationForest f;
    f.parent.assign(static_cast<size_t>(inst.graph.num_vertices()), -1);
    std::copy(forest->parent.begin(), forest->parent.end(), f.parent.begin());
    for (EdgeId e = 0; e < m; ++e) {
      auto [u, v] = tree.edge(e);
      f.parent[n + e] = depth[u] >= depth[v] ? u : v;
    }
    for (Vertex v = 0; v < n; ++v)
      for (int j = 0; j < ell; ++j) f.parent[first_leaf + v * ell + j] = v;
    inst.forest = std::move(f);
  }
  return inst;
}

/// Gap instance with l = 2t - 4: lcr <= t(b-1) on yes-instances, > tcb on
/// no-instances. The gap itself is not checked.
inline GadgetInstance gen_gap_instance(const Graph& tree, int b, int t, int c = 1) {
  if (t < b * b + 2) throw std::invalid_argument("gen_gap_instance: t must be at least b^2 + 2");
  if (c < 1) throw std::invalid_argument("gen_gap_instance: c must be at least 1");
  GadgetInstance inst = gen_bandwidth_to_two_sided(tree, b, 2 * t - 4);
  inst.family = "gap";
  inst.k = t * (b - 1);
  inst.params["t"] = t;
  inst.params["c"] = c;
  inst.params["yes_threshold"] = static_cast<long long>(t) * (b - 1);
  inst.params["no_threshold"] = static_cast<long long>(t) * c * b;
  return inst;
}

// ---------------------------------------------------------------------------
// Bin packing gadgets

enum class UbpVariant { basic, domination, twincover };

inline UbpVariant parse_ubp_variant(std::string_view s) {
  if (s == "basic") return UbpVariant::basic;
  if (s == "domination") return UbpVariant::domination;
  if (s == "twincover") return UbpVariant::twincover;
  throw std::invalid_argument("unknown ubp variant '" + std::string(s) + "'");
}

inline std::string_view ubp_variant_name(UbpVariant v) {
  switch (v) {
    case UbpVariant::basic: return "basic";
    case UbpVariant::domination: return "domination";
    case UbpVariant::twincover: return "twincover";
  }
  return "?";
}

/// Vertex ids: u1 = 0, u2 = 1, the cycle C in order (v_i first on its arc),
/// the item paths or cliques in input order, then the u1 spokes and the u2
/// spokes.
inline GadgetInstance gen_ubp(const std::vector<long long>& items, long long B, int b, UbpVariant variant) {
  if (b < 3) throw std::invalid_argument("gen_ubp: b must be at least 3");
  validate_ubp(UbpInstance{items, B, b});
  if (variant == UbpVariant::twincover)
    for (long long x : items)
      if ((x + 1) * (x + 1) > B)
        throw std::invalid_argument("gen_ubp: item " + std::to_string(x) +
                                    " exceeds sqrt(B)-1; apply pad_ubp first");
  const long long total = static_cast<long long>(b) * B;
  if (total + 2 > 5'000'000) throw std::invalid_argument("gen_ubp: instance too large");

  GadgetInstance inst;
  inst.family = "ubp-" + std::string(ubp_variant_name(variant));
  inst.items = items;
  const Vertex u1 = 0, u2 = 1;
  std::vector<Edge> es;
  Vertex next = 2;
  const long long cycle_len = variant == UbpVariant::twincover ? b : total;
  for (long long i = 0; i < cycle_len; ++i) inst.cycle.push_back(next++);
  for (long long i = 0; i < cycle_len; ++i)
    es.push_back(make_edge(inst.cycle[i], inst.cycle[(i + 1) % cycle_len]));
  for (long long x : items) {
    auto& grp = inst.item_vertices.emplace_back();
    for (long long j = 0; j < x; ++j) grp.push_back(next++);
    for (size_t a = 0; a < grp.size(); ++a) {
      es.push_back(make_edge(u1, grp[a]));
      es.push_back(make_edge(u2, grp[a]));
      if (variant == UbpVariant::twincover) {
        for (size_t c = a + 1; c < grp.size(); ++c) es.push_back(make_edge(grp[a], grp[c]));
      } else if (a + 1 < grp.size()) {
        es.push_back(make_edge(grp[a], grp[a + 1]));
      }
    }
  }
  if (variant == UbpVariant::domination)
    for (Vertex c : inst.cycle) es.push_back(make_edge(u1, c));

  const long long m = static_cast<long long>(es.size());
  std::vector<Vertex> vs;
  const long long stride = variant == UbpVariant::twincover ? 1 : B;
  for (int i = 0; i < b; ++i) vs.push_back(inst.cycle[static_cast<size_t>(i * stride)]);
  long long l1, l2;
  if (variant == UbpVariant::twincover) {
    l1 = B * m + 1;
    l2 = B * (b * l1 + m) + 1;
  } else {
    l1 = m + 1;
    l2 = l1 * b + m + 1;
  }
  if (l2 > 20'000'000) throw std::invalid_argument("gen_ubp: spoke count too large");

  Graph core = Graph::from_edges(next, std::move(es));
  auto [g1, reg1] = attach_spokes_from(core, u1, vs, static_cast<int>(l1));
  auto [g2, reg2] = attach_spokes_from(g1, u2, vs, static_cast<int>(l2));
  inst.graph = std::move(g2);
  inst.spokes = {std::move(reg1), std::move(reg2)};
  inst.k = variant == UbpVariant::twincover ? static_cast<int>(B) : 1;
  inst.names = {{"u1", u1}, {"u2", u2}};
  for (int i = 0; i < b; ++i) inst.names.emplace_back("v" + std::to_string(i + 1), vs[i]);
  inst.params = {{"B", B}, {"b", b}, {"m", m}, {"l1", l1}, {"l2", l2}};
  return inst;
}

/// 1-planar plan for ubp-basic / ubp-domination from a bin packing. Bin i's
/// paths sit in the region between the u1 spokes to v_i and v_{i+1}; the
/// edge from the j-th path vertex of that region to u2 leaves through the
/// j-th cycle edge of the arc. In the domination variant the u1 edge to the
/// j-th inner arc vertex crosses the path edge between slots j and j+1 when
/// both slots belong to the same path.
inline CrossingPlan witness_ubp(const GadgetInstance& inst, const Partition& bins) {
  const bool dom = inst.family == "ubp-domination";
  if (inst.family != "ubp-basic" && !dom)
    throw std::invalid_argument("witness_ubp: instance is not ubp-basic or ubp-domination");
  const long long B = inst.param("B");
  const int b = static_cast<int>(inst.param("b"));
  const UbpInstance src{inst.items, B, b};
  if (!verify_partition(src, bins)) {
    std::string sums;
    for (const auto& bin : bins) {
      long long s = 0;
      for (long long x : bin) s += x;
      sums += (sums.empty() ? "" : ",") + std::to_string(s);
    }
    throw std::invalid_argument("witness_ubp: invalid partition (bin sums " + sums + ", B=" + std::to_string(B) + ")");
  }
  // Assign concrete items to bins, first unused item of each value.
  std::vector<char> used(inst.items.size(), 0);
  std::vector<std::vector<size_t>> region(static_cast<size_t>(b));
  for (int i = 0; i < b; ++i) {
    for (long long x : bins[i])
      for (size_t j = 0; j < inst.items.size(); ++j)
        if (!used[j] && inst.items[j] == x) {
          used[j] = 1;
          region[i].push_back(j);
          break;
        }
    std::sort(region[i].begin(), region[i].end());
  }

  const Graph& g = inst.graph;
  const Vertex u1 = inst.name("u1"), u2 = inst.name("u2");
  const size_t L = inst.cycle.size();
  CrossingPlan plan = CrossingPlan::empty(g);
  for (int i = 0; i < b; ++i) {
    std::vector<Vertex> slot;  // slot j (0-based) -> path vertex
    std::vector<size_t> owner;
    for (size_t item : region[i])
      for (Vertex p : inst.item_vertices[item]) {
        slot.push_back(p);
        owner.push_back(item);
      }
    const size_t base = static_cast<size_t>(i) * static_cast<size_t>(B);
    for (size_t j = 0; j < slot.size(); ++j) {
      const Vertex a = inst.cycle[(base + j) % L], c = inst.cycle[(base + j + 1) % L];
      plan.add_crossing(*g.edge_id(slot[j], u2), *g.edge_id(a, c));
      if (dom && j + 1 < slot.size() && owner[j] == owner[j + 1])
        plan.add_crossing(*g.edge_id(u1, c), *g.edge_id(slot[j], slot[j + 1]));
    }
  }
  plan = canonical_plan(plan);
  if (auto res = verify(g, 1, plan); !res)
    throw std::logic_error("witness_ubp produced a plan that fails verification: " + res.reason);
  return plan;
}

// ---------------------------------------------------------------------------
// Certificates

struct CertificateClaim {
  std::string name;
  std::string property;        // property name, or "near-planar"
  std::vector<Vertex> set;     // deletion / domination / twin-cover set
  bool checked = true;
  bool holds = false;
  std::string explanation;
};

struct StructuralCertificate {
  std::string family;
  std::vector<CertificateClaim> claims;
  std::optional<Edge> near_planar_edge;

  bool all_hold() const {
    return std::all_of(claims.begin(), claims.end(),
                       [](const CertificateClaim& c) { return !c.checked || c.holds; });
  }
};

inline constexpr int kNearPlanarGuard = 50'000;

namespace detail {

inline CertificateClaim residual_claim(const Graph& g, std::string name, Property prop, std::vector<Vertex> removed) {
  auto sub = delete_vertices(g, removed);
  auto res = check_structure(sub.graph, prop, {}, sub.to_original);
  return {std::move(name), std::string(property_name(prop)), std::move(removed), true, res.holds, res.explanation};
}

inline CertificateClaim set_claim(const Graph& g, std::string name, Property prop, std::vector<Vertex> set) {
  auto res = check_structure(g, prop, set);
  return {std::move(name), std::string(property_name(prop)), std::move(set), true, res.holds, res.explanation};
}

}  // namespace detail

/// An edge e with g - e planar, searched among the edges of one Kuratowski
/// subdivision (every such e lies on all of them). nullopt when g is planar
/// or no edge works.
inline std::optional<Edge> find_near_planar_edge(const Graph& g) {
  auto obs = find_obstruction(g.num_vertices(), g.edges());
  if (!obs) return std::nullopt;
  std::vector<Edge> rest;
  for (EdgeId e : obs->edges) {
    rest.clear();
    for (EdgeId f = 0; f < g.num_edges(); ++f)
      if (f != e) rest.push_back(g.edge(f));
    if (is_planar_edges(g.num_vertices(), rest)) return g.edge(e);
  }
  return std::nullopt;
}

inline StructuralCertificate certify(const GadgetInstance& inst, bool near_planar_search = true) {
  StructuralCertificate cert;
  cert.family = inst.family;
  const Graph& g = inst.graph;
  if (inst.family == "ubp-basic" || inst.family == "ubp-domination") {
    std::vector<Vertex> del{inst.name("u1"), inst.name("u2")};
    for (int i = 1; i <= inst.param("b"); ++i) del.push_back(inst.name("v" + std::to_string(i)));
    cert.claims.push_back(detail::residual_claim(g, "path forest after removing u1, u2, v1..vb",
                                                 Property::path_forest, del));
    cert.claims.push_back(detail::residual_claim(g, "unicyclic after removing u1, u2 (fvs <= 3)",
                                                 Property::unicyclic, {inst.name("u1"), inst.name("u2")}));
    if (inst.family == "ubp-domination")
      cert.claims.push_back(detail::set_claim(g, "{u1, u2} dominates", Property::dominating_set,
                                              {inst.name("u1"), inst.name("u2")}));
    CertificateClaim np{"near-planar (one edge removal leaves a planar graph)", "near-planar", {}, false, false, ""};
    if (near_planar_search && g.num_edges() <= kNearPlanarGuard) {
      np.checked = true;
      cert.near_planar_edge = find_near_planar_edge(g);
      np.holds = cert.near_planar_edge.has_value();
      np.explanation = np.holds ? "removing {" + std::to_string(cert.near_planar_edge->u) + "," +
                                      std::to_string(cert.near_planar_edge->v) + "} leaves a planar graph"
                                : "no single edge removal leaves a planar graph";
    } else {
      np.explanation = "not checked";
    }
    cert.claims.push_back(std::move(np));
  } else if (inst.family == "ubp-twincover") {
    std::vector<Vertex> cover = inst.cycle;
    cover.push_back(inst.name("u1"));
    cover.push_back(inst.name("u2"));
    std::sort(cover.begin(), cover.end());
    cert.claims.push_back(detail::set_claim(g, "V(C) + {u1, u2} is a twin cover of size b+2",
                                            Property::twin_cover, cover));
  } else if (inst.family == "two-sided") {
    const int ns = static_cast<int>(inst.param("n_source"));
    std::vector<Edge> src;
    for (const auto& e : g.edges())
      if (e.u < ns && e.v < ns) src.push_back(e);
    if (detail::find_cycle(Graph::from_edges(ns, src)).empty()) {
      cert.claims.push_back(detail::residual_claim(g, "acyclic after removing uX, uY (fvs <= 2)",
                                                   Property::acyclic, {inst.name("uX"), inst.name("uY")}));
    } else {
      cert.claims.push_back({"acyclic after removing uX, uY (fvs <= 2)", "acyclic", {}, false, false,
                             "source is not a forest; claim does not apply"});
    }
  } else if (inst.family == "bandwidth" || inst.family == "gap") {
    auto res = check_structure(g, Property::acyclic);
    cert.claims.push_back({"result is a tree", "acyclic", {}, true, res.holds && is_tree(g), res.explanation});
    if (inst.forest) {
      auto fc = validate_elimination_forest(g, *inst.forest);
      cert.claims.push_back({"transported elimination forest is valid", "elimination-forest", {}, true, fc.valid,
                             fc.valid ? "height " + std::to_string(fc.height) : fc.violation});
    }
  } else {
    throw std::invalid_argument("certify: unknown family '" + inst.family + "'");
  }
  return cert;
}

}  // namespace lcr
