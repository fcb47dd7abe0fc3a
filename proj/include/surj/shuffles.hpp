#pragma once

// Shuffles and stuffles of a composition, their refined subsets, and the
// block permutations eps(r_1,...,r_s).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>
#include <utility>
#include <vector>

#include "surj/error.hpp"
#include "surj/words.hpp"

namespace surj {

/// A composition (n_1,...,n_p) of n: all parts >= 1.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 1) throw input_error("composition parts must be positive");
  }
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  int total() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// 1-based positions n_1, n_1+n_2, ..., n.
  std::vector<std::size_t> block_ends() const {
    std::vector<std::size_t> ends;
    std::size_t acc = 0;
    for (int p : parts_) ends.push_back(acc += static_cast<std::size_t>(p));
    return ends;
  }

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// Which refined subset to keep; the comparison is between the images of
/// consecutive block ends f(n_1), f(n_1+n_2), ..., f(n).
enum class BlockFilter {
  all,     ///< SH / Sh
  left,    ///< strictly decreasing block ends (the < product)
  right,   ///< strictly increasing block ends (the > product)
  merged,  ///< all block ends equal (the middle product)
  weak,    ///< weakly increasing block ends
};

struct Stuffle {
  Surjection map;
  Composition composition;

  int defect() const noexcept { return map.defect(); }
  friend bool operator==(const Stuffle& a, const Stuffle& b) { return a.map == b.map && a.composition == b.composition; }
};

inline bool block_ends_pass(const Surjection& f, const std::vector<std::size_t>& ends, BlockFilter filter) {
  for (std::size_t i = 1; i < ends.size(); ++i) {
    const Letter a = f(ends[i - 1]), b = f(ends[i]);
    switch (filter) {
      case BlockFilter::all: return true;
      case BlockFilter::left: if (!(a > b)) return false; break;
      case BlockFilter::right: if (!(a < b)) return false; break;
      case BlockFilter::merged: if (a != b) return false; break;
      case BlockFilter::weak: if (!(a <= b)) return false; break;
    }
  }
  return true;
}

namespace detail {

// Each block receives a sorted subset of {1..t}; the union must be {1..t}.
// Blocks of size zero are allowed here and contribute nothing.
inline void stuffles_of_arity(const std::vector<int>& parts, int t, bool permutations_only,
                              std::vector<Surjection>& out) {
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<Letter> word(static_cast<std::size_t>(n));
  const unsigned full = (t >= 32) ? ~0u : ((1u << t) - 1u);
  auto rec = [&](auto&& self, std::size_t block, std::size_t offset, unsigned used, int remaining) -> void {
    if (block == parts.size()) {
      if (used == full) out.push_back(Surjection::unchecked(word, t));
      return;
    }
    const int k = parts[block];
    const int missing = t - std::popcount(used);
    if (missing > remaining) return;
    // choose a k-subset of {1..t} in increasing order
    std::vector<Letter> pick(static_cast<std::size_t>(k));
    auto choose = [&](auto&& choose_self, int idx, Letter from, unsigned mask) -> void {
      if (idx == k) {
        for (int i = 0; i < k; ++i) word[offset + static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i)];
        self(self, block + 1, offset + static_cast<std::size_t>(k), used | mask, remaining - k);
        return;
      }
      for (Letter v = from; v <= t - (k - idx - 1); ++v) {
        const unsigned bit = 1u << (v - 1);
        if (permutations_only && (used & bit)) continue;
        pick[static_cast<std::size_t>(idx)] = v;
        choose_self(choose_self, idx + 1, v + 1, mask | bit);
      }
    };
    choose(choose, 0, 1, 0u);
  };
  rec(rec, 0, 0, 0u, n);
}

inline std::vector<Surjection> all_shuffles(const std::vector<int>& parts) {
  std::vector<Surjection> out;
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  stuffles_of_arity(parts, n, true, out);
  return out;
}

}  // namespace detail

/// eps(n,m) = (m+1,...,m+n,1,...,m), extended to s > 2 parts by
/// eps(r_1..r_s) = eps(r_1+...+r_{s-1}, r_s) o (eps(r_1..r_{s-1}) x 1_{r_s}).
inline Surjection epsilon(const Composition& parts) {
  const auto& r = parts.parts();
  if (r.empty()) throw degenerate_input_error("epsilon of an empty composition");
  if (r.size() == 1) return identity(r[0]);
  if (r.size() == 2) {
    std::vector<Letter> w;
    for (int i = 1; i <= r[0]; ++i) w.push_back(r[1] + i);
    for (int i = 1; i <= r[1]; ++i) w.push_back(i);
    return Surjection::unchecked(std::move(w), r[0] + r[1]);
  }
  std::vector<int> head(r.begin(), r.end() - 1);
  const int head_total = std::accumulate(head.begin(), head.end(), 0);
  return compose(epsilon(Composition{head_total, r.back()}),
                 concat(epsilon(Composition(head)), identity(r.back())));
}

/// Sh(n_1,...,n_p) and its refined subsets, in lexicographic order.
/// `merged` yields Sh^*(r_1..r_p): the maps prod_{block ends} f' with
/// f' in Sh(r_1-1,...,r_p-1).
inline std::vector<Surjection> enumerate_shuffles(const Composition& parts, BlockFilter filter = BlockFilter::all) {
  std::vector<Surjection> out;
  if (filter == BlockFilter::merged) {
    std::vector<int> reduced;
    for (int p : parts.parts()) reduced.push_back(p - 1);
    const auto ends = parts.block_ends();
    for (const auto& f : detail::all_shuffles(reduced)) out.push_back(insert_top(f, ends));
  } else {
    const auto ends = parts.block_ends();
    for (auto& f : detail::all_shuffles(parts.parts()))
      if (block_ends_pass(f, ends, filter)) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// SH(n_1,...,n_p) and its refined subsets, in lexicographic order of the maps.
inline std::vector<Stuffle> enumerate_stuffles(const Composition& parts, BlockFilter filter = BlockFilter::all) {
  std::vector<Surjection> maps;
  const int n = parts.total();
  int lo = 0;
  for (int p : parts.parts()) lo = std::max(lo, p);
  for (int t = lo; t <= n; ++t) detail::stuffles_of_arity(parts.parts(), t, false, maps);
  const auto ends = parts.block_ends();
  std::vector<Stuffle> out;
  for (auto& f : maps)
    if (block_ends_pass(f, ends, filter)) out.push_back({std::move(f), parts});
  std::sort(out.begin(), out.end(), [](const Stuffle& a, const Stuffle& b) { return a.map < b.map; });
  return out;
}

/// Memoized SH^filter(r, s) maps, shared by the product implementations.
inline const std::vector<Surjection>& cached_stuffles(int r, int s, BlockFilter filter) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, BlockFilter>, std::vector<Surjection>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(r, s, filter);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<Surjection> maps;
    for (auto& st : enumerate_stuffles(Composition{r, s}, filter)) maps.push_back(std::move(st.map));
    it = cache.emplace(key, std::move(maps)).first;
  }
  return it->second;
}

}  // namespace surj
