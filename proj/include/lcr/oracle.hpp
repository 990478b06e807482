#pragma once

// Exact k-planarity decisions.
//
// The core is a planarization search: starting from the empty plan, test the
// planarization; if it is not planar, some segment of the Kuratowski
// subdivision found in it must receive a new crossing in every completing
// plan, so branching over those segments is exhaustive. Sibling branches
// forbid the obstruction segments tried before them, which keeps subtrees
// disjoint.
//
// For 1-planarity only vertex-disjoint crossing pairs are generated: a
// crossing between adjacent edges that are crossed nowhere else can be
// removed by swapping their initial pieces, so some 1-planar drawing uses
// disjoint pairs only. For larger capacities (direct mode) any pair of
// distinct edges may cross, repeatedly, because uncrossing swaps can push
// crossings onto other edges and break the per-edge limit.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "lcr/crossing_plan.hpp"
#include "lcr/graph.hpp"
#include "lcr/planarity.hpp"
#include "lcr/transforms.hpp"
#include "lcr/witness.hpp"

namespace lcr {

enum class Answer { yes, no, inconclusive };

/// Why a "no" was returned.
enum class NoReason { none, density, bipartite_obstruction, exhausted_search };

inline std::string_view answer_name(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::inconclusive: return "inconclusive";
  }
  return "?";
}

inline std::string_view reason_name(NoReason r) {
  switch (r) {
    case NoReason::none: return "none";
    case NoReason::density: return "density";
    case NoReason::bipartite_obstruction: return "bipartite-obstruction";
    case NoReason::exhausted_search: return "exhausted-search";
  }
  return "?";
}

struct Verdict {
  Answer answer = Answer::inconclusive;
  std::optional<CrossingPlan> witness;  // present iff answer == yes
  NoReason reason = NoReason::none;     // set iff answer == no
  long long nodes = 0;
  double seconds = 0.0;
  int k = 0;
};

inline constexpr long long kDefaultBudget = 10'000'000;

struct SearchOptions {
  long long budget = kDefaultBudget;  // planarity tests
  bool parallel = false;
  int threads = 0;                    // 0: hardware concurrency
};

namespace detail {

/// Planarization search with per-edge capacity `cap`.
class CrossingSearch {
 public:
  struct Shared {
    std::atomic<long long> nodes{0};
    std::atomic<bool> found{false};
    std::atomic<bool> exhausted_budget{false};
    std::atomic<bool> cap_hit{false};
    long long budget = kDefaultBudget;
    long long max_crossings = 0;  // depth limit of the current deepening round
    std::mutex mu;
    std::optional<CrossingPlan> witness;
  };

  CrossingSearch(const Graph& g, int cap, Shared& shared)
      : g_(g), cap_(cap), disjoint_pairs_(cap == 1), shared_(shared) {
    plan_ = CrossingPlan::empty(g);
    forbidden_.assign(static_cast<size_t>(g.num_edges()), std::vector<char>(1, 0));
    const long long n = g.num_vertices(), m = g.num_edges();
    required_crossings_ = n >= 3 ? m - 3 * n + 6 : 0;
  }

  long long required_crossings() const { return required_crossings_; }

  struct Segment {
    EdgeId edge;
    int gap;
    friend auto operator<=>(const Segment&, const Segment&) = default;
  };

  struct Branch {
    Segment a;
    Segment b;
    std::vector<Segment> forbid;  // segments forbidden before taking this branch
  };

  /// Runs the full search from the current state.
  void run() { search(); }

  /// Expands the root once and returns its branches (for parallel mode).
  /// Returns nullopt if the root is already decided (planar, or pruned).
  std::optional<std::vector<Branch>> root_branches() {
    auto cands = expand();
    if (!cands) return std::nullopt;
    std::vector<Branch> out;
    std::vector<Segment> forbid;
    for (const auto& c : *cands) {
      set_forbidden(c, true);
      for (const auto& p : partners(c)) out.push_back({c, p, forbid});
      forbid.push_back(c);
    }
    for (const auto& c : *cands) set_forbidden(c, false);
    return out;
  }

  void run_branch(const Branch& br) {
    for (const auto& s : br.forbid) set_forbidden(s, true);
    set_forbidden(br.a, false);
    insert_crossing(br.a, br.b);
    search();
  }

 private:
  bool has_capacity(EdgeId e) const {
    return static_cast<int>(plan_.order[e].size()) < cap_;
  }
  bool is_forbidden(const Segment& s) const { return forbidden_[s.edge][s.gap] != 0; }
  void set_forbidden(const Segment& s, bool v) { forbidden_[s.edge][s.gap] = v ? 1 : 0; }

  bool stop() const {
    return shared_.found.load(std::memory_order_relaxed) ||
           shared_.exhausted_budget.load(std::memory_order_relaxed);
  }

  // Tests the current planarization. Returns nullopt when the node is closed
  // (planar -> witness recorded, or budget/prune), else the candidate
  // segments in deterministic order.
  std::optional<std::vector<Segment>> expand() {
    if (stop()) return std::nullopt;
    if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > shared_.budget) {
      shared_.exhausted_budget.store(true);
      return std::nullopt;
    }
    const int n = g_.num_vertices();
    const int m = g_.num_edges();

    if (disjoint_pairs_) {
      long long avail = 0;
      for (EdgeId e = 0; e < m; ++e)
        if (has_capacity(e) && !forbidden_[e][0]) ++avail;
      if (plan_.num_crossings() + avail / 2 < required_crossings_) return std::nullopt;
      if (shared_.max_crossings < required_crossings_) {
        shared_.cap_hit.store(true, std::memory_order_relaxed);
        return std::nullopt;
      }
    }

    // Planarization, collapsed to a simple graph; remember which segments
    // realise every simple edge.
    seg_edges_.clear();
    const int c = plan_.num_crossings();
    for (EdgeId e = 0; e < m; ++e) {
      Vertex prev = g_.edge(e).u;
      const auto& ord = plan_.order[e];
      for (size_t i = 0; i <= ord.size(); ++i) {
        Vertex nxt = i < ord.size() ? n + ord[i] : g_.edge(e).v;
        seg_edges_.push_back({make_edge(prev, nxt), Segment{e, static_cast<int>(i)}});
        prev = nxt;
      }
    }
    std::sort(seg_edges_.begin(), seg_edges_.end());
    simple_.clear();
    simple_first_.clear();
    for (size_t i = 0; i < seg_edges_.size(); ++i) {
      if (i == 0 || seg_edges_[i].first != seg_edges_[i - 1].first) {
        simple_.push_back(seg_edges_[i].first);
        simple_first_.push_back(i);
      }
    }
    simple_first_.push_back(seg_edges_.size());

    // Segments that can never receive another crossing survive into every
    // completion, so they must be planar on their own.
    fixed_.clear();
    for (const auto& [edge, seg] : seg_edges_)
      if (!has_capacity(seg.edge) || is_forbidden(seg)) fixed_.push_back(edge);
    fixed_.erase(std::unique(fixed_.begin(), fixed_.end()), fixed_.end());
    if (fixed_.size() < simple_.size() && !is_planar_edges(n + c, fixed_)) return std::nullopt;

    std::optional<Obstruction> obs;
    if (c >= shared_.max_crossings) {
      if (!is_planar_edges(n + c, simple_)) {
        shared_.cap_hit.store(true, std::memory_order_relaxed);
        return std::nullopt;
      }
    } else {
      obs = find_obstruction(n + c, simple_);
    }
    if (!obs) {
      record_witness();
      return std::nullopt;
    }
    std::vector<Segment> cands;
    for (int idx : obs->edges)
      for (size_t i = simple_first_[idx]; i < simple_first_[idx + 1]; ++i) {
        const Segment& s = seg_edges_[i].second;
        if (has_capacity(s.edge) && !is_forbidden(s)) cands.push_back(s);
      }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    if (cands.empty()) return std::nullopt;
    return cands;
  }

  void record_witness() {
    std::lock_guard lock(shared_.mu);
    if (!shared_.found.load()) {
      shared_.witness = plan_;
      shared_.found.store(true);
    }
  }

  bool shares_endpoint(EdgeId a, EdgeId b) const {
    const Edge& x = g_.edge(a);
    const Edge& y = g_.edge(b);
    return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
  }

  std::vector<Segment> partners(const Segment& s) const {
    std::vector<Segment> out;
    for (EdgeId f = 0; f < g_.num_edges(); ++f) {
      if (f == s.edge || !has_capacity(f)) continue;
      if (disjoint_pairs_ && shares_endpoint(f, s.edge)) continue;
      for (int gap = 0; gap < static_cast<int>(forbidden_[f].size()); ++gap)
        if (!forbidden_[f][gap]) out.push_back({f, gap});
    }
    return out;
  }

  void insert_crossing(const Segment& a, const Segment& b) {
    const CrossingId id = plan_.num_crossings();
    plan_.crossings.emplace_back(std::min(a.edge, b.edge), std::max(a.edge, b.edge));
    for (const Segment& s : {a, b}) {
      auto& ord = plan_.order[s.edge];
      ord.insert(ord.begin() + s.gap, id);
      auto& fb = forbidden_[s.edge];
      fb.insert(fb.begin() + s.gap + 1, 0);
    }
  }

  void remove_crossing(const Segment& a, const Segment& b) {
    for (const Segment& s : {a, b}) {
      auto& ord = plan_.order[s.edge];
      ord.erase(ord.begin() + s.gap);
      auto& fb = forbidden_[s.edge];
      fb.erase(fb.begin() + s.gap + 1);
    }
    plan_.crossings.pop_back();
  }

  void search() {
    auto cands = expand();
    if (!cands) return;
    for (size_t i = 0; i < cands->size() && !stop(); ++i) {
      const Segment s = (*cands)[i];
      set_forbidden(s, true);  // also excludes s as its own partner
      for (const Segment& p : partners(s)) {
        if (stop()) break;
        // Forbidden flag of s must not block the insertion into s itself.
        set_forbidden(s, false);
        insert_crossing(s, p);
        search();
        remove_crossing(s, p);
        set_forbidden(s, true);
      }
    }
    for (const auto& s : *cands) set_forbidden(s, false);
  }

  const Graph& g_;
  int cap_;
  bool disjoint_pairs_;
  Shared& shared_;
  long long required_crossings_ = 0;
  CrossingPlan plan_;
  std::vector<std::vector<char>> forbidden_;  // per edge, per gap
  std::vector<std::pair<Edge, Segment>> seg_edges_;
  std::vector<Edge> simple_;
  std::vector<Edge> fixed_;
  std::vector<size_t> simple_first_;
};

inline void run_round(const Graph& g, int cap, const SearchOptions& opt,
                      CrossingSearch::Shared& shared) {
  if (!opt.parallel) {
    CrossingSearch search(g, cap, shared);
    search.run();
  } else {
    std::optional<std::vector<CrossingSearch::Branch>> branches;
    {
      CrossingSearch root(g, cap, shared);
      branches = root.root_branches();
    }
    if (branches) {
      int threads = opt.threads > 0 ? opt.threads
                                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
      std::atomic<size_t> next{0};
      auto worker = [&] {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= branches->size() || shared.found.load() || shared.exhausted_budget.load()) return;
          CrossingSearch local(g, cap, shared);
          local.run_branch((*branches)[i]);
        }
      };
      std::vector<std::jthread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
  }
}

inline Verdict run_crossing_search(const Graph& g, int cap, const SearchOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  CrossingSearch::Shared shared;
  shared.budget = opt.budget;

  // Iterative deepening on the total number of crossings. A round that never
  // cuts a branch at the depth limit has explored everything.
  const long long deepest = static_cast<long long>(g.num_edges()) * cap / 2;
  long long start = 0;
  if (cap == 1) {
    CrossingSearch probe(g, cap, shared);
    start = std::clamp(probe.required_crossings(), 0LL, deepest);
  }
  for (long long depth = start; depth <= deepest; ++depth) {
    shared.max_crossings = depth;
    shared.cap_hit.store(false);
    run_round(g, cap, opt, shared);
    if (shared.found.load() || shared.exhausted_budget.load() || !shared.cap_hit.load()) break;
  }

  Verdict v;
  v.k = cap;
  v.nodes = std::min(shared.nodes.load(), shared.budget);
  if (shared.found.load()) {
    v.answer = Answer::yes;
    v.witness = shared.witness;
  } else if (shared.exhausted_budget.load()) {
    v.answer = Answer::inconclusive;
  } else {
    v.answer = Answer::no;
    v.reason = NoReason::exhausted_search;
  }
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

}  // namespace detail

/// Exact 1-planarity by obstruction-guided planarization search. Running out
/// of budget yields Answer::inconclusive, never "no".
inline Verdict decide_one_planar(const Graph& g, const SearchOptions& opt = {}) {
  return detail::run_crossing_search(g, 1, opt);
}

// ---------------------------------------------------------------------------
// Lower-bound rejections

namespace detail {

// 3.81 = 381/100; compare 100^2 a^2 > 381^2 b with 128-bit integers.
inline bool exceeds_381(unsigned __int128 lhs_count, unsigned __int128 rhs_factor) {
  return static_cast<unsigned __int128>(10000) * lhs_count * lhs_count >
         static_cast<unsigned __int128>(381 * 381) * rhs_factor;
}

}  // namespace detail

/// Cheap certificates that g is not k-planar: edge density above
/// 3.81 sqrt(k) n, or three vertices with at least 7k + 1 common neighbours
/// (a K_{7k+1,3} subgraph). nullopt means "no conclusion".
inline std::optional<NoReason> lower_bound_reject(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("lower_bound_reject: k must be at least 1");
  const auto n = static_cast<unsigned __int128>(g.num_vertices());
  const auto m = static_cast<unsigned __int128>(g.num_edges());
  if (detail::exceeds_381(m, static_cast<unsigned __int128>(k) * n * n)) return NoReason::density;

  const long long need = 7LL * k + 1;
  // Count common neighbours of vertex triples via the triples inside each
  // neighbourhood. Skipped when that enumeration would be too large.
  long long work = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const long long d = g.degree(v);
    work += d * (d - 1) * (d - 2) / 6;
    if (work > 50'000'000) return std::nullopt;
  }
  std::vector<uint64_t> keys;
  keys.reserve(static_cast<size_t>(work));
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    for (size_t a = 0; a < nb.size(); ++a)
      for (size_t b = a + 1; b < nb.size(); ++b)
        for (size_t c = b + 1; c < nb.size(); ++c)
          keys.push_back((static_cast<uint64_t>(nb[a]) << 42) | (static_cast<uint64_t>(nb[b]) << 21) |
                         static_cast<uint64_t>(nb[c]));
  }
  if (g.num_vertices() >= (1 << 21)) return std::nullopt;
  std::sort(keys.begin(), keys.end());
  for (size_t i = 0; i < keys.size();) {
    size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    if (static_cast<long long>(j - i) >= need) return NoReason::bipartite_obstruction;
    i = j;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// k-planarity

enum class DecideMode { automatic, subdivide, direct };

struct DecideOptions {
  DecideMode mode = DecideMode::automatic;
  SearchOptions search;
};

/// lcr(g) <= k. k = 0 is planarity. automatic: lower-bound rejections, then
/// the subdivision route. subdivide: 1-planarity of G_k, witness projected
/// back. direct: capacity-k search on g itself.
inline Verdict decide_k_planar(const Graph& g, int k, const DecideOptions& opt = {}) {
  if (k < 0) throw std::invalid_argument("decide_k_planar: k must be non-negative");
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };
  Verdict v;
  v.k = k;
  if (k == 0) {
    v.nodes = 1;
    if (is_planar(g)) {
      v.answer = Answer::yes;
      v.witness = CrossingPlan::empty(g);
    } else {
      v.answer = Answer::no;
      v.reason = NoReason::exhausted_search;  // the planarity test is exhaustive
    }
    v.seconds = elapsed();
    return v;
  }
  if (opt.mode == DecideMode::automatic) {
    if (auto r = lower_bound_reject(g, k)) {
      v.answer = Answer::no;
      v.reason = *r;
      v.seconds = elapsed();
      return v;
    }
  }
  if (opt.mode == DecideMode::direct) {
    v = detail::run_crossing_search(g, k, opt.search);
  } else {
    const SubdivisionMap map = subdivide(g, k);
    v = decide_one_planar(map.subdivided, opt.search);
    if (v.witness) v.witness = project_subdivided(map, *v.witness);
  }
  v.k = k;
  if (v.witness) {
    v.witness = canonical_plan(*v.witness);
    if (auto res = verify(g, k, *v.witness); !res)
      throw std::logic_error("decide_k_planar produced a witness that fails verification: " + res.reason);
  }
  v.seconds = elapsed();
  return v;
}

// ---------------------------------------------------------------------------
// Independent brute force for tiny graphs

inline constexpr int kDirectSmallMaxEdges = 9;

/// Enumerates every crossing multiset with per-edge capacity k (adjacent and
/// repeated pairs included) in order of size, with every crossing order along
/// every edge, and tests each planarization. Exact; m <= 9 only.
inline Verdict lcr_direct_small(const Graph& g, int k) {
  if (g.num_edges() > kDirectSmallMaxEdges)
    throw std::invalid_argument("lcr_direct_small: at most " + std::to_string(kDirectSmallMaxEdges) +
                                " edges supported");
  if (k < 0) throw std::invalid_argument("lcr_direct_small: k must be non-negative");
  const auto t0 = std::chrono::steady_clock::now();
  const int m = g.num_edges();
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  for (EdgeId e = 0; e < m; ++e)
    for (EdgeId f = e + 1; f < m; ++f) pairs.emplace_back(e, f);

  Verdict v;
  v.k = k;
  std::vector<int> load(static_cast<size_t>(m), 0);
  std::vector<int> chosen;  // indices into pairs, non-decreasing (multiset)

  // Tries all orderings of the chosen multiset.
  auto try_orders = [&]() -> bool {
    CrossingPlan plan = CrossingPlan::empty(g);
    for (int pi : chosen) plan.add_crossing(pairs[pi].first, pairs[pi].second);
    std::vector<std::vector<CrossingId>> base = plan.order;
    for (auto& o : base) std::sort(o.begin(), o.end());
    plan.order = base;
    std::function<bool(EdgeId)> rec = [&](EdgeId e) -> bool {
      if (e == m) {
        ++v.nodes;
        auto p = planarize(g, plan);
        if (is_planar_edges(p.num_vertices, p.edges)) {
          v.witness = plan;
          return true;
        }
        return false;
      }
      auto& ord = plan.order[e];
      std::sort(ord.begin(), ord.end());
      do {
        if (rec(e + 1)) return true;
      } while (std::next_permutation(ord.begin(), ord.end()));
      return false;
    };
    return rec(0);
  };

  std::function<bool(int, int, int)> choose = [&](int start, int remaining, int) -> bool {
    if (remaining == 0) return try_orders();
    for (int pi = start; pi < static_cast<int>(pairs.size()); ++pi) {
      auto [e, f] = pairs[pi];
      if (load[e] >= k || load[f] >= k) continue;
      ++load[e];
      ++load[f];
      chosen.push_back(pi);
      bool ok = choose(pi, remaining - 1, 0);
      chosen.pop_back();
      --load[e];
      --load[f];
      if (ok) return true;
    }
    return false;
  };

  const int max_crossings = m * k / 2;
  for (int s = 0; s <= max_crossings; ++s) {
    if (choose(0, s, 0)) {
      v.answer = Answer::yes;
      break;
    }
  }
  if (v.answer != Answer::yes) {
    v.answer = Answer::no;
    v.reason = NoReason::exhausted_search;
  }
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

// ---------------------------------------------------------------------------
// 2-layer drawings

struct TwoLayerResult {
  int lcr = 0;
  std::vector<Vertex> x_order;
  std::vector<Vertex> y_order;
};

inline constexpr double kTwoLayerGuard = 1e7;

namespace detail {

inline void check_layers(const Graph& g, std::span<const Vertex> xs, std::span<const Vertex> ys) {
  std::vector<int> side(static_cast<size_t>(g.num_vertices()), -1);
  for (Vertex x : xs) {
    if (x < 0 || x >= g.num_vertices() || side[x] != -1)
      throw std::invalid_argument("layers: X is not a valid vertex subset");
    side[x] = 0;
  }
  for (Vertex y : ys) {
    if (y < 0 || y >= g.num_vertices() || side[y] != -1)
      throw std::invalid_argument("layers: Y overlaps X or is not a valid vertex subset");
    side[y] = 1;
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (side[v] < 0) throw std::invalid_argument("layers: X and Y do not cover every vertex");
  for (const auto& e : g.edges())
    if (side[e.u] == side[e.v]) throw std::invalid_argument("layers: graph is not bipartite with these layers");
}

}  // namespace detail

/// Crossings per edge of the straight-line 2-layer drawing with the given
/// orders: {x1,y1} and {x2,y2} cross iff the orders invert.
inline std::vector<int> two_layer_crossings(const Graph& g, std::span<const Vertex> x_order,
                                            std::span<const Vertex> y_order) {
  std::vector<int> pos(static_cast<size_t>(g.num_vertices()), -1);
  for (size_t i = 0; i < x_order.size(); ++i) pos[x_order[i]] = static_cast<int>(i);
  for (size_t i = 0; i < y_order.size(); ++i) pos[y_order[i]] = static_cast<int>(i);
  std::vector<char> is_x(static_cast<size_t>(g.num_vertices()), 0);
  for (Vertex x : x_order) is_x[x] = 1;
  const int m = g.num_edges();
  std::vector<std::pair<int, int>> xy(static_cast<size_t>(m));
  for (EdgeId e = 0; e < m; ++e) {
    auto [a, b] = g.edge(e);
    xy[e] = is_x[a] ? std::pair{pos[a], pos[b]} : std::pair{pos[b], pos[a]};
  }
  std::vector<int> cnt(static_cast<size_t>(m), 0);
  for (EdgeId e = 0; e < m; ++e)
    for (EdgeId f = e + 1; f < m; ++f) {
      const long long dx = xy[e].first - xy[f].first;
      const long long dy = xy[e].second - xy[f].second;
      if (dx * dy < 0) {
        ++cnt[e];
        ++cnt[f];
      }
    }
  return cnt;
}

/// Exact 2-layer local crossing number by enumerating both layer orders.
inline TwoLayerResult two_layer_lcr(const Graph& g, std::span<const Vertex> xs,
                                    std::span<const Vertex> ys) {
  detail::check_layers(g, xs, ys);
  double combos = 1;
  for (size_t i = 2; i <= xs.size(); ++i) combos *= static_cast<double>(i);
  for (size_t i = 2; i <= ys.size(); ++i) combos *= static_cast<double>(i);
  if (combos > kTwoLayerGuard)
    throw std::invalid_argument("two_layer_lcr: |X|!|Y|! exceeds the enumeration guard");

  std::vector<Vertex> xo(xs.begin(), xs.end()), yo(ys.begin(), ys.end());
  std::sort(xo.begin(), xo.end());
  std::sort(yo.begin(), yo.end());
  TwoLayerResult best;
  best.lcr = -1;
  do {
    std::sort(yo.begin(), yo.end());
    do {
      auto cnt = two_layer_crossings(g, xo, yo);
      int mx = cnt.empty() ? 0 : *std::max_element(cnt.begin(), cnt.end());
      if (best.lcr < 0 || mx < best.lcr) {
        best = {mx, xo, yo};
        if (mx == 0) return best;
      }
    } while (std::next_permutation(yo.begin(), yo.end()));
  } while (std::next_permutation(xo.begin(), xo.end()));
  if (best.lcr < 0) best.lcr = 0;
  return best;
}

}  // namespace lcr
