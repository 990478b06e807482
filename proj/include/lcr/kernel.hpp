#pragma once

// Kernelization for k-planarity parameterized by vertex cover number and by
// neighborhood diversity. Every rule is exposed on its own; kernelize_vc and
// kernelize_nd chain them in a fixed order.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lcr/graph.hpp"

namespace lcr {

// ---------------------------------------------------------------------------
// Threshold arithmetic. 3.81 is 381/100 exactly.

namespace detail {

inline unsigned __int128 isqrt_ceil(unsigned __int128 x) {
  if (x == 0) return 0;
  auto r = static_cast<unsigned __int128>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while (r * r < x) ++r;
  return r;
}

}  // namespace detail

/// ceil(3.81 * s * sqrt(2k)).
inline long long diversity_ceiling(long long s, int k) {
  const auto x = static_cast<unsigned __int128>(381 * 381) * static_cast<unsigned __int128>(s) *
                 static_cast<unsigned __int128>(s) * static_cast<unsigned __int128>(2 * k);
  const auto r = detail::isqrt_ceil(x);
  return static_cast<long long>((r + 99) / 100);
}

/// Explicit kernel bounds: #deg>=3 outside vertices and #deg-2 outside vertices.
inline long long deg3_bound(long long s, int k) {
  return 7LL * k * std::max(0LL, s - 2) * diversity_ceiling(s, k);
}
inline long long deg2_bound(long long s, int k) {
  return 16LL * k * k * s * diversity_ceiling(s, k);
}

inline long long deg2_twin_threshold(long long s, int k) { return 16LL * k * k * s; }

// ---------------------------------------------------------------------------
// Labels

/// For every vertex outside the cover with degree >= 2: its two smallest
/// neighbours. Labels are numbered 0..distinct-1 in lexicographic order.
struct PiLabeling {
  std::vector<Vertex> cover;                     // sorted
  std::vector<Vertex> labeled;                   // outside vertices with degree >= 2, ascending
  std::vector<std::pair<Vertex, Vertex>> label;  // parallel to labeled
  std::vector<int> label_id;                     // parallel to labeled
  int distinct = 0;
};

inline PiLabeling pi_labeling(const Graph& g, std::span<const Vertex> cover) {
  if (!is_vertex_cover(g, cover)) throw std::invalid_argument("pi_labeling: S is not a vertex cover");
  const int n = g.num_vertices();
  PiLabeling pl;
  pl.cover.assign(cover.begin(), cover.end());
  std::sort(pl.cover.begin(), pl.cover.end());
  pl.cover.erase(std::unique(pl.cover.begin(), pl.cover.end()), pl.cover.end());
  std::vector<char> in(static_cast<size_t>(n), 0);
  for (Vertex s : pl.cover) in[s] = 1;

  for (Vertex v = 0; v < n; ++v) {
    if (in[v] || g.degree(v) < 2) continue;
    auto nb = g.neighbors(v);
    pl.labeled.push_back(v);
    pl.label.emplace_back(nb[0], nb[1]);
  }

  // Two counting-sort passes, low key then high key.
  const size_t L = pl.labeled.size();
  std::vector<size_t> idx(L), tmp(L);
  for (size_t i = 0; i < L; ++i) idx[i] = i;
  std::vector<size_t> count(static_cast<size_t>(n) + 1);
  for (int pass = 0; pass < 2; ++pass) {
    auto key = [&](size_t i) { return pass == 0 ? pl.label[i].second : pl.label[i].first; };
    std::fill(count.begin(), count.end(), 0);
    for (size_t i : idx) ++count[static_cast<size_t>(key(i)) + 1];
    for (size_t b = 1; b < count.size(); ++b) count[b] += count[b - 1];
    for (size_t i : idx) tmp[count[static_cast<size_t>(key(i))]++] = i;
    std::swap(idx, tmp);
  }
  pl.label_id.assign(L, -1);
  for (size_t j = 0; j < L; ++j) {
    if (j > 0 && pl.label[idx[j]] != pl.label[idx[j - 1]]) ++pl.distinct;
    pl.label_id[idx[j]] = pl.distinct;
  }
  if (L > 0) ++pl.distinct;
  return pl;
}

// ---------------------------------------------------------------------------
// Rules

enum class KernelRule { diversity, deg3_twins, deg2_twins, ktt };

inline std::string_view rule_name(KernelRule r) {
  switch (r) {
    case KernelRule::diversity: return "rule_diversity";
    case KernelRule::deg3_twins: return "rule_deg3_twins";
    case KernelRule::deg2_twins: return "rule_deg2_twins";
    case KernelRule::ktt: return "twin_vertex_cover";
  }
  return "?";
}

struct Rejection {
  KernelRule rule = KernelRule::diversity;
  std::string detail;
};

/// Rejects iff #labels > 3.81 |S| sqrt(2k).
inline std::optional<Rejection> rule_diversity(const PiLabeling& pl, int k) {
  const auto d = static_cast<unsigned __int128>(pl.distinct);
  const auto s = static_cast<unsigned __int128>(pl.cover.size());
  if (static_cast<unsigned __int128>(10000) * d * d >
      static_cast<unsigned __int128>(381 * 381) * 2 * static_cast<unsigned __int128>(k) * s * s)
    return Rejection{KernelRule::diversity,
                     std::to_string(pl.distinct) + " distinct labels exceed 3.81*|S|*sqrt(2k) with |S|=" +
                         std::to_string(pl.cover.size()) + ", k=" + std::to_string(k)};
  return std::nullopt;
}

/// Rejects when three cover vertices have 7k+1 common neighbours among the
/// outside vertices of degree >= 3 (a K_{7k+1,3} subgraph). Outside
/// vertices are bucketed by label and counted once per further neighbour, so
/// passing bounds every label bucket by 7k(|S|-2).
inline std::optional<Rejection> rule_deg3_twins(const Graph& g, const PiLabeling& pl, int k) {
  const long long need = 7LL * k + 1;
  const auto n = static_cast<uint64_t>(g.num_vertices());
  std::vector<uint64_t> keys;
  for (size_t i = 0; i < pl.labeled.size(); ++i) {
    const Vertex v = pl.labeled[i];
    if (g.degree(v) < 3) continue;
    auto nb = g.neighbors(v);
    for (size_t j = 2; j < nb.size(); ++j)
      keys.push_back(static_cast<uint64_t>(pl.label_id[i]) * n + static_cast<uint64_t>(nb[j]));
  }
  std::sort(keys.begin(), keys.end());
  for (size_t i = 0; i < keys.size();) {
    size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    if (static_cast<long long>(j - i) >= need) {
      const Vertex third = static_cast<Vertex>(keys[i] % n);
      const int lid = static_cast<int>(keys[i] / n);
      auto it = std::find(pl.label_id.begin(), pl.label_id.end(), lid);
      auto [a, b] = pl.label[static_cast<size_t>(it - pl.label_id.begin())];
      return Rejection{KernelRule::deg3_twins,
                       "vertices " + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(third) + " have " + std::to_string(j - i) +
                           " common neighbours (K_{" + std::to_string(need) + ",3} present)"};
    }
    i = j;
  }
  return std::nullopt;
}

struct Deg2Result {
  Graph graph;
  std::vector<Vertex> to_original;  // new id -> id in the input graph
  std::vector<Vertex> deleted;      // ids in the input graph, ascending
};

/// Outside degree-2 vertices beyond the first 16 k^2 |S| of each neighbour
/// pair class, ascending.
inline std::vector<Vertex> deg2_twin_deletions(const Graph& g, std::span<const Vertex> cover, int k) {
  if (!is_vertex_cover(g, cover)) throw std::invalid_argument("rule_deg2_twins: S is not a vertex cover");
  std::vector<char> in(static_cast<size_t>(g.num_vertices()), 0);
  long long s = 0;
  for (Vertex v : cover)
    if (!in[v]) {
      in[v] = 1;
      ++s;
    }
  const long long keep = deg2_twin_threshold(s, k);
  std::vector<std::pair<std::pair<Vertex, Vertex>, Vertex>> items, tmp;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!in[v] && g.degree(v) == 2) items.push_back({{g.neighbors(v)[0], g.neighbors(v)[1]}, v});
  // Stable counting sort by second then first neighbour; ids stay ascending within a class.
  tmp.resize(items.size());
  std::vector<size_t> count(static_cast<size_t>(g.num_vertices()) + 1);
  for (int pass = 0; pass < 2; ++pass) {
    auto key = [&](const auto& it) { return static_cast<size_t>(pass == 0 ? it.first.second : it.first.first); };
    std::fill(count.begin(), count.end(), 0);
    for (const auto& it : items) ++count[key(it) + 1];
    for (size_t b = 1; b < count.size(); ++b) count[b] += count[b - 1];
    for (const auto& it : items) tmp[count[key(it)]++] = it;
    std::swap(items, tmp);
  }
  std::vector<Vertex> deleted;
  for (size_t i = 0; i < items.size();) {
    size_t j = i;
    while (j < items.size() && items[j].first == items[i].first) ++j;
    for (size_t t = i + static_cast<size_t>(std::min<long long>(keep, static_cast<long long>(j - i))); t < j; ++t)
      deleted.push_back(items[t].second);
    i = j;
  }
  std::sort(deleted.begin(), deleted.end());
  return deleted;
}

/// Trims every class of outside degree-2 vertices with the same neighbour
/// pair to 16 k^2 |S| members, deleting the largest ids.
inline Deg2Result rule_deg2_twins(const Graph& g, std::span<const Vertex> cover, int k) {
  Deg2Result out;
  out.deleted = deg2_twin_deletions(g, cover, k);
  auto sub = delete_vertices(g, out.deleted);
  out.graph = std::move(sub.graph);
  out.to_original = std::move(sub.to_original);
  return out;
}

// ---------------------------------------------------------------------------
// Pipelines

enum class KernelVerdict { kernel, not_k_planar };

struct RuleLog {
  std::string rule;
  long long count = 0;  // vertices removed, or 1 for a rejection
};

struct KernelReport {
  KernelVerdict verdict = KernelVerdict::kernel;
  std::optional<Rejection> rejection;
  Graph kernel;
  std::vector<Vertex> to_original;  // kernel id -> input id
  std::vector<Vertex> cover;        // input ids
  int k = 1;
  int t = 0;                        // nd pipeline only
  std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> ktt;
  std::vector<RuleLog> fired;
  std::vector<Vertex> stripped;     // input ids
  std::vector<Vertex> deg2_deleted; // input ids
  long long distinct_labels = 0;
  long long diversity_ceiling = 0;
  long long deg3_bound = 0;
  long long deg2_bound = 0;
  long long deg3_outside = 0;
  long long deg2_outside = 0;
  int n_before = 0, m_before = 0, n_after = 0, m_after = 0;
  double seconds = 0.0;

  bool bounds_hold() const {
    return verdict != KernelVerdict::kernel || (deg3_outside <= deg3_bound && deg2_outside <= deg2_bound);
  }
};

/// strip_low_degree -> cover -> labels -> diversity -> deg3 twins -> deg2
/// twins. Without a supplied cover the 2-approximate cover of the stripped
/// graph is used.
inline KernelReport kernelize_vc(const Graph& g, int k,
                                 std::optional<std::vector<Vertex>> supplied_cover = std::nullopt) {
  if (k < 1) throw std::invalid_argument("kernelize_vc: k must be at least 1");
  if (supplied_cover && !is_vertex_cover(g, *supplied_cover))
    throw std::invalid_argument("kernelize_vc: supplied set is not a vertex cover");
  const auto t0 = std::chrono::steady_clock::now();
  KernelReport rep;
  rep.k = k;
  rep.n_before = g.num_vertices();
  rep.m_before = g.num_edges();

  StripResult strip = strip_low_degree(g);
  rep.stripped = strip.removed;
  if (!strip.removed.empty()) rep.fired.push_back({"strip_low_degree", static_cast<long long>(strip.removed.size())});
  const Graph& h = strip.graph;

  std::vector<Vertex> cover;
  if (supplied_cover) {
    std::vector<Vertex> local(static_cast<size_t>(g.num_vertices()), -1);
    for (size_t i = 0; i < strip.to_original.size(); ++i) local[strip.to_original[i]] = static_cast<Vertex>(i);
    for (Vertex v : *supplied_cover)
      if (local[v] >= 0) cover.push_back(local[v]);
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  } else {
    cover = approx_vertex_cover(h);
  }
  for (Vertex v : cover) rep.cover.push_back(strip.to_original[v]);
  const long long s = static_cast<long long>(cover.size());
  rep.diversity_ceiling = lcr::diversity_ceiling(s, k);
  rep.deg3_bound = lcr::deg3_bound(s, k);
  rep.deg2_bound = lcr::deg2_bound(s, k);

  auto finish = [&] {
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  };
  auto reject = [&](Rejection r) {
    rep.verdict = KernelVerdict::not_k_planar;
    rep.fired.push_back({std::string(rule_name(r.rule)), 1});
    rep.rejection = std::move(r);
    return finish();
  };

  PiLabeling pl = pi_labeling(h, cover);
  rep.distinct_labels = pl.distinct;
  if (auto r = rule_diversity(pl, k)) return reject(*r);
  if (auto r = rule_deg3_twins(h, pl, k)) return reject(*r);

  std::vector<char> in(static_cast<size_t>(h.num_vertices()), 0);
  for (Vertex v : cover) in[v] = 1;
  Deg2Result d2;
  d2.deleted = deg2_twin_deletions(h, cover, k);
  for (Vertex v : d2.deleted) rep.deg2_deleted.push_back(strip.to_original[v]);
  if (d2.deleted.empty()) {
    rep.kernel = std::move(strip.graph);
    rep.to_original = std::move(strip.to_original);
  } else {
    rep.fired.push_back({"rule_deg2_twins", static_cast<long long>(d2.deleted.size())});
    auto sub = delete_vertices(h, d2.deleted);
    d2.to_original = std::move(sub.to_original);
    rep.kernel = std::move(sub.graph);
    rep.to_original.reserve(d2.to_original.size());
    for (Vertex v : d2.to_original) rep.to_original.push_back(strip.to_original[v]);
  }
  rep.n_after = rep.kernel.num_vertices();
  rep.m_after = rep.kernel.num_edges();

  // Kernel id -> id in the stripped graph; identity when nothing was deleted.
  auto stripped_id = [&](Vertex nv) { return d2.to_original.empty() ? nv : d2.to_original[nv]; };
  for (Vertex nv = 0; nv < rep.kernel.num_vertices(); ++nv) {
    if (in[stripped_id(nv)]) continue;
    const int d = rep.kernel.degree(nv);
    if (d >= 3) ++rep.deg3_outside;
    else if (d == 2) ++rep.deg2_outside;
  }
  if (!rep.bounds_hold()) throw std::logic_error("kernelize_vc: kernel exceeds the size bound");
  return finish();
}

struct TwinCoverResult {
  std::vector<Vertex> cover;  // sorted; empty when ktt is set
  std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> ktt;
};

/// Vertex cover of size <= 2 d t built from whole twin classes, or a K_{t,t}.
inline TwinCoverResult twin_vertex_cover(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("twin_vertex_cover: t must be at least 1");
  const auto ut = static_cast<size_t>(t);
  TwinPartition tp = twin_partition(g);
  TwinCoverResult out;
  std::vector<char> in(static_cast<size_t>(g.num_vertices()), 0);
  std::vector<char> taken(tp.classes.size(), 0);
  auto take = [&](size_t c) {
    taken[c] = 1;
    for (Vertex v : tp.classes[c]) in[v] = 1;
  };
  for (size_t c = 0; c < tp.classes.size(); ++c) {
    if (tp.kind[c] != TwinKind::true_twin) continue;
    const auto& cls = tp.classes[c];
    if (cls.size() >= 2 * ut) {
      out.ktt = {{cls.begin(), cls.begin() + t}, {cls.begin() + t, cls.begin() + 2 * t}};
      return out;
    }
    take(c);
  }
  for (const auto& e : g.edges()) {
    if (in[e.u] || in[e.v]) continue;
    const auto a = static_cast<size_t>(tp.class_of[e.u]);
    const auto b = static_cast<size_t>(tp.class_of[e.v]);
    const auto& ca = tp.classes[a];
    const auto& cb = tp.classes[b];
    if (ca.size() >= ut && cb.size() >= ut) {
      out.ktt = {{ca.begin(), ca.begin() + t}, {cb.begin(), cb.begin() + t}};
      return out;
    }
    if (ca.size() < cb.size() || (ca.size() == cb.size() && a < b)) take(a);
    else take(b);
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (in[v]) out.cover.push_back(v);
  return out;
}

/// t = 8 ceil(sqrt(2k)).
inline int nd_threshold(int k) {
  const auto r = detail::isqrt_ceil(static_cast<unsigned __int128>(2 * k));
  return 8 * static_cast<int>(r);
}

/// Twin cover with t = 8 ceil(sqrt(2k)); a K_{t,t} rejects, otherwise the
/// cover feeds kernelize_vc.
inline KernelReport kernelize_nd(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("kernelize_nd: k must be at least 1");
  const auto t0 = std::chrono::steady_clock::now();
  const int t = nd_threshold(k);
  TwinCoverResult tc = twin_vertex_cover(g, t);
  if (tc.ktt) {
    KernelReport rep;
    rep.k = k;
    rep.t = t;
    rep.n_before = g.num_vertices();
    rep.m_before = g.num_edges();
    rep.verdict = KernelVerdict::not_k_planar;
    rep.ktt = tc.ktt;
    rep.rejection = Rejection{KernelRule::ktt, "K_{" + std::to_string(t) + "," + std::to_string(t) +
                                                   "} subgraph exceeds the k-planar edge density"};
    rep.fired.push_back({std::string(rule_name(KernelRule::ktt)), 1});
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }
  KernelReport rep = kernelize_vc(g, k, tc.cover);
  rep.t = t;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace lcr
