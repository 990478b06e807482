#pragma once

// Unary bin packing: split a multiset S into b bins of sum exactly B.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace lcr {

struct UbpInstance {
  std::vector<long long> items;
  long long B = 0;
  int b = 0;
};

using Partition = std::vector<std::vector<long long>>;

inline void validate_ubp(const UbpInstance& inst) {
  if (inst.b < 1) throw std::invalid_argument("ubp: b must be at least 1");
  if (inst.B < 1) throw std::invalid_argument("ubp: B must be at least 1");
  long long sum = 0;
  for (long long x : inst.items) {
    if (x < 1) throw std::invalid_argument("ubp: items must be positive");
    sum += x;
  }
  if (sum != inst.B * inst.b)
    throw std::invalid_argument("ubp: item sum " + std::to_string(sum) + " differs from b*B = " +
                                std::to_string(inst.B * inst.b));
}

/// Bins sorted descending inside, ordered by smallest item (then contents).
inline Partition canonical_partition(Partition bins) {
  for (auto& bin : bins) std::sort(bin.begin(), bin.end(), std::greater<>());
  std::sort(bins.begin(), bins.end(), [](const auto& x, const auto& y) {
    const long long mx = x.empty() ? 0 : x.back();
    const long long my = y.empty() ? 0 : y.back();
    if (mx != my) return mx < my;
    return x < y;
  });
  return bins;
}

inline bool verify_partition(const UbpInstance& inst, const Partition& bins) {
  if (static_cast<int>(bins.size()) != inst.b) return false;
  std::vector<long long> all;
  for (const auto& bin : bins) {
    long long s = 0;
    for (long long x : bin) s += x;
    if (s != inst.B) return false;
    all.insert(all.end(), bin.begin(), bin.end());
  }
  std::vector<long long> want = inst.items;
  std::sort(all.begin(), all.end());
  std::sort(want.begin(), want.end());
  return all == want;
}

/// Exact search. Bins are filled one at a time and each bin takes the largest
/// remaining item; item multiplicities whose completion failed are memoised.
inline std::optional<Partition> solve_ubp(const UbpInstance& inst) {
  validate_ubp(inst);
  std::vector<long long> vals = inst.items;
  std::sort(vals.begin(), vals.end(), std::greater<>());
  if (!vals.empty() && vals.front() > inst.B) return std::nullopt;
  std::vector<long long> value;
  std::vector<int> count;
  for (long long x : vals) {
    if (value.empty() || value.back() != x) {
      value.push_back(x);
      count.push_back(0);
    }
    ++count.back();
  }
  const size_t t = value.size();

  struct Hash {
    size_t operator()(const std::vector<int>& v) const noexcept {
      uint64_t h = 1469598103934665603ULL;
      for (int x : v) h = (h ^ static_cast<uint64_t>(x)) * 1099511628211ULL;
      return static_cast<size_t>(h);
    }
  };
  std::unordered_set<std::vector<int>, Hash> failed;
  Partition bins;
  std::vector<long long> current;

  std::function<bool()> next_bin;
  std::function<bool(size_t, long long)> fill = [&](size_t from, long long room) -> bool {
    if (room == 0) {
      bins.push_back(current);
      auto saved = current;
      current.clear();
      if (next_bin()) return true;
      current = std::move(saved);
      bins.pop_back();
      return false;
    }
    for (size_t i = from; i < t; ++i) {
      if (count[i] == 0 || value[i] > room) continue;
      --count[i];
      current.push_back(value[i]);
      bool ok = fill(i, room - value[i]);
      current.pop_back();
      ++count[i];
      if (ok) return true;
    }
    return false;
  };
  next_bin = [&]() -> bool {
    size_t first = 0;
    while (first < t && count[first] == 0) ++first;
    if (first == t) return static_cast<int>(bins.size()) == inst.b;
    if (failed.count(count)) return false;
    --count[first];
    current.push_back(value[first]);
    bool ok = fill(first, inst.B - value[first]);
    current.pop_back();
    ++count[first];
    if (!ok) failed.insert(count);
    return ok;
  };
  if (!next_bin()) return std::nullopt;
  return canonical_partition(std::move(bins));
}

struct PaddedUbp {
  UbpInstance instance;
  bool size_condition = false;  // every item x satisfies x <= sqrt(B') - 1
  std::string violation;
};

/// Adds 2bB copies of B+1 and raises the capacity to B + 2B(B+1).
inline PaddedUbp pad_ubp(const UbpInstance& inst) {
  validate_ubp(inst);
  for (long long x : inst.items)
    if (x > inst.B) throw std::invalid_argument("pad_ubp: item " + std::to_string(x) + " exceeds B");
  PaddedUbp out;
  out.instance.b = inst.b;
  out.instance.B = inst.B + 2 * inst.B * (inst.B + 1);
  out.instance.items = inst.items;
  out.instance.items.insert(out.instance.items.end(), static_cast<size_t>(2 * inst.b * inst.B), inst.B + 1);
  out.size_condition = true;
  for (long long x : out.instance.items)
    if ((x + 1) * (x + 1) > out.instance.B) {
      out.size_condition = false;
      out.violation = "item " + std::to_string(x) + " exceeds sqrt(B')-1 for B'=" + std::to_string(out.instance.B);
      break;
    }
  return out;
}

}  // namespace lcr
