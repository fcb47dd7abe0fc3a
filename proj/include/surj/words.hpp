#pragma once

// Surjective maps [n] -> [r] stored as packed words, and the purely
// combinatorial operations on them: standardization, (co)restriction,
// the products x, \ and ., the top decomposition, gap vectors and the
// weak Bruhat order on ST_n^r.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "surj/error.hpp"

namespace surj {

using Letter = int;

/// A packed word: a surjection from {1..n} onto {1..r}.
///
/// The empty word is admitted as the unit 1_K; every other instance has
/// n >= r >= 1 and uses each value of {1..r} at least once.
class Surjection {
 public:
  Surjection() = default;

  explicit Surjection(std::vector<Letter> word) : word_(std::move(word)) {
    arity_ = word_.empty() ? 0 : *std::max_element(word_.begin(), word_.end());
    std::vector<bool> seen(static_cast<std::size_t>(std::max(arity_, 0)) + 1, false);
    for (Letter v : word_) {
      if (v < 1) throw input_error("surjection letters must be positive");
      seen[static_cast<std::size_t>(v)] = true;
    }
    for (Letter v = 1; v <= arity_; ++v)
      if (!seen[static_cast<std::size_t>(v)])
        throw input_error("word is not packed: value " + std::to_string(v) + " is missing");
  }

  Surjection(std::initializer_list<Letter> word) : Surjection(std::vector<Letter>(word)) {}

  /// Wraps a word already known to be packed.
  static Surjection unchecked(std::vector<Letter> word, Letter arity) {
    Surjection s;
    s.word_ = std::move(word);
    s.arity_ = arity;
    return s;
  }

  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }
  Letter arity() const noexcept { return arity_; }
  int defect() const noexcept { return static_cast<int>(word_.size()) - arity_; }
  bool is_permutation() const noexcept { return defect() == 0; }

  /// 1-based evaluation x(i).
  Letter operator()(std::size_t i) const { return word_[i - 1]; }
  Letter operator[](std::size_t i) const { return word_[i]; }

  const std::vector<Letter>& word() const noexcept { return word_; }
  auto begin() const noexcept { return word_.begin(); }
  auto end() const noexcept { return word_.end(); }

  friend bool operator==(const Surjection& a, const Surjection& b) { return a.word_ == b.word_; }

  /// Canonical total order: by length, then lexicographically.
  friend std::strong_ordering operator<=>(const Surjection& a, const Surjection& b) {
    if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.word_.begin(), a.word_.end(),
                                                  b.word_.begin(), b.word_.end());
  }

 private:
  std::vector<Letter> word_;
  Letter arity_ = 0;
};

inline std::string to_string(const Surjection& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(x[i]);
  }
  return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Surjection& x) { return os << to_string(x); }

/// The identity permutation 1_n.
inline Surjection identity(int n) {
  std::vector<Letter> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Surjection::unchecked(std::move(w), n);
}

/// The constant map c_n = (1,...,1).
inline Surjection constant(int n) {
  return Surjection::unchecked(std::vector<Letter>(static_cast<std::size_t>(n), 1), n > 0 ? 1 : 0);
}

// ---------------------------------------------------------------------------
// Standardization and (co)restriction

/// The unique packed word with the same strict comparisons as `word`.
inline Surjection standardize(std::span<const Letter> word) {
  std::vector<Letter> values(word.begin(), word.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Letter> out;
  out.reserve(word.size());
  for (Letter v : word) {
    if (v < 1) throw input_error("standardize expects positive integers");
    out.push_back(static_cast<Letter>(std::lower_bound(values.begin(), values.end(), v) - values.begin()) + 1);
  }
  return Surjection::unchecked(std::move(out), static_cast<Letter>(values.size()));
}

inline Surjection standardize(const std::vector<Letter>& word) {
  return standardize(std::span<const Letter>(word));
}

/// x|_J: standardized subword at the (1-based) positions of J.
inline Surjection restrict(const Surjection& x, const std::set<std::size_t>& positions) {
  if (positions.empty()) throw degenerate_input_error("restriction to an empty position set");
  std::vector<Letter> sub;
  sub.reserve(positions.size());
  for (std::size_t j : positions) {
    if (j < 1 || j > x.size()) throw input_error("restriction position out of range");
    sub.push_back(x(j));
  }
  return standardize(sub);
}

/// x|_{first..last}, positions inclusive and 1-based.
inline Surjection restrict_range(const Surjection& x, std::size_t first, std::size_t last) {
  if (first < 1 || last > x.size() || first > last) throw input_error("restriction range out of bounds");
  return standardize(std::span<const Letter>(x.word().data() + first - 1, last - first + 1));
}

/// x|^K: standardized subword made of the letters whose value lies in K.
inline Surjection corestrict(const Surjection& x, const std::set<Letter>& values) {
  if (values.empty()) throw degenerate_input_error("co-restriction to an empty value set");
  for (Letter v : values)
    if (v < 1 || v > x.arity()) throw input_error("co-restriction value out of range");
  std::vector<Letter> sub;
  for (Letter v : x)
    if (values.count(v)) sub.push_back(v);
  return standardize(sub);
}

/// x|^{lo..hi}; the result of an interval co-restriction is a plain shift.
inline Surjection corestrict_range(const Surjection& x, Letter lo, Letter hi) {
  if (lo < 1 || hi > x.arity() || lo > hi) throw input_error("co-restriction range out of bounds");
  std::vector<Letter> sub;
  for (Letter v : x)
    if (v >= lo && v <= hi) sub.push_back(v - lo + 1);
  return Surjection::unchecked(std::move(sub), hi - lo + 1);
}

// ---------------------------------------------------------------------------
// Products

/// f x g = (f(1),...,f(n), g(1)+r,...,g(m)+r).
inline Surjection concat(const Surjection& x, const Surjection& y) {
  std::vector<Letter> w(x.begin(), x.end());
  w.reserve(x.size() + y.size());
  for (Letter v : y) w.push_back(v + x.arity());
  return Surjection::unchecked(std::move(w), x.arity() + y.arity());
}

inline Surjection concat(std::span<const Surjection> factors) {
  Surjection out;
  for (const auto& f : factors) out = concat(out, f);
  return out;
}

/// f o g as maps; requires |f| = arity(g).
inline Surjection compose(const Surjection& f, const Surjection& g) {
  if (static_cast<Letter>(f.size()) != g.arity())
    throw input_error("composition needs |f| equal to the arity of g");
  std::vector<Letter> w;
  w.reserve(g.size());
  for (Letter v : g) w.push_back(f(static_cast<std::size_t>(v)));
  return Surjection::unchecked(std::move(w), f.arity());
}

/// y \ z = eps(r,s) o (y x z): y's letters sit above z's.
inline Surjection backslash(const Surjection& y, const Surjection& z) {
  if (y.empty() || z.empty()) throw degenerate_input_error("backslash needs non-empty operands");
  std::vector<Letter> w;
  w.reserve(y.size() + z.size());
  for (Letter v : y) w.push_back(v + z.arity());
  for (Letter v : z) w.push_back(v);
  return Surjection::unchecked(std::move(w), y.arity() + z.arity());
}

/// True when x = x|_{1..k} \ x|_{k+1..n}: every prefix letter exceeds every suffix letter.
inline bool backslash_splits_at(const Surjection& x, std::size_t k) {
  if (k == 0 || k >= x.size()) return false;
  Letter prefix_min = *std::min_element(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
  Letter suffix_max = *std::max_element(x.begin() + static_cast<std::ptrdiff_t>(k), x.end());
  return prefix_min > suffix_max;
}

// ---------------------------------------------------------------------------
// Irreducibles for x

/// True when x = x|_{1..k} x x|_{k+1..n}, i.e. every letter of the prefix is
/// smaller than every letter of the suffix.
inline bool concat_splits_at(const Surjection& x, std::size_t k) {
  Letter prefix_max = *std::max_element(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
  Letter suffix_min = *std::min_element(x.begin() + static_cast<std::ptrdiff_t>(k), x.end());
  return prefix_max < suffix_min;
}

inline bool is_irreducible(const Surjection& x) {
  if (x.empty()) return false;
  for (std::size_t k = 1; k < x.size(); ++k)
    if (concat_splits_at(x, k)) return false;
  return true;
}

/// The unique factorization x = x^1 x ... x x^p into irreducibles.
inline std::vector<Surjection> irreducible_factorization(const Surjection& x) {
  if (x.empty()) throw degenerate_input_error("factorization of the empty word");
  std::vector<Surjection> factors;
  std::size_t start = 1;
  Letter prefix_max = 0;
  for (std::size_t k = 1; k <= x.size(); ++k) {
    prefix_max = std::max(prefix_max, x(k));
    // every split point is a prefix that is exactly {1..prefix_max}
    if (static_cast<Letter>(k) >= prefix_max &&
        (k == x.size() || *std::min_element(x.begin() + static_cast<std::ptrdiff_t>(k), x.end()) > prefix_max)) {
      factors.push_back(restrict_range(x, start, k));
      start = k + 1;
    }
  }
  return factors;
}

// ---------------------------------------------------------------------------
// Top decomposition x = prod_{j_1<...<j_lambda} x'

struct TopDecomposition {
  std::vector<std::size_t> positions;  ///< 1-based positions of the value r
  Surjection lower;                     ///< x|^{1..r-1}, empty when r = 1

  std::size_t lambda() const noexcept { return positions.size(); }
};

inline TopDecomposition top_decomposition(const Surjection& x) {
  if (x.empty()) throw degenerate_input_error("top decomposition of the empty word");
  TopDecomposition d;
  std::vector<Letter> lower;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    if (x(i) == x.arity())
      d.positions.push_back(i);
    else
      lower.push_back(x(i));
  }
  d.lower = Surjection::unchecked(std::move(lower), x.arity() - 1);
  return d;
}

/// Inverse of top_decomposition: insert the value arity(lower)+1 at `positions`.
inline Surjection insert_top(const Surjection& lower, const std::vector<std::size_t>& positions) {
  const std::size_t n = lower.size() + positions.size();
  const Letter top = lower.arity() + 1;
  std::vector<Letter> w(n, 0);
  for (std::size_t p : positions) {
    if (p < 1 || p > n || w[p - 1] != 0) throw input_error("invalid top positions");
    w[p - 1] = top;
  }
  auto it = lower.begin();
  for (auto& v : w)
    if (v == 0) v = *it++;
  return Surjection::unchecked(std::move(w), top);
}

/// Gap vector M(x) = (M_lambda, ..., M_1) with the leading gap M_0 kept apart.
struct GapVector {
  std::vector<std::size_t> entries;
  std::size_t head_gap = 0;

  friend auto operator<=>(const GapVector& a, const GapVector& b) {
    return std::lexicographical_compare_three_way(a.entries.begin(), a.entries.end(),
                                                  b.entries.begin(), b.entries.end());
  }
  friend bool operator==(const GapVector& a, const GapVector& b) { return a.entries == b.entries; }
};

inline GapVector gap_vector(const Surjection& x) {
  const auto d = top_decomposition(x);
  const auto& j = d.positions;
  GapVector g;
  g.head_gap = j.front() - 1;
  g.entries.push_back(x.size() - j.back());
  for (std::size_t i = j.size() - 1; i >= 1; --i) g.entries.push_back(j[i] - j[i - 1] - 1);
  return g;
}

/// x^l = x|^{1..l_1} x x|^{l_1+1..l_2} x ... x x|^{l_p+1..r}; cuts are values.
inline Surjection value_split(const Surjection& x, std::span<const Letter> cuts) {
  if (x.empty()) throw degenerate_input_error("value split of the empty word");
  Letter prev = 0;
  Surjection out;
  for (Letter c : cuts) {
    if (c <= prev || c >= x.arity()) throw input_error("value cuts must satisfy 0 < l_1 < ... < l_p < r");
    out = concat(out, corestrict_range(x, prev + 1, c));
    prev = c;
  }
  return concat(out, corestrict_range(x, prev + 1, x.arity()));
}

// ---------------------------------------------------------------------------
// The top-merging product and indecomposables

/// x . y: tops of x followed by tops of y shifted by |x|, lower word x' x y'.
inline Surjection dot(const Surjection& x, const Surjection& y) {
  if (x.empty() || y.empty()) throw degenerate_input_error("dot product needs non-empty operands");
  auto dx = top_decomposition(x);
  auto dy = top_decomposition(y);
  std::vector<std::size_t> tops = dx.positions;
  for (auto k : dy.positions) tops.push_back(k + x.size());
  return insert_top(concat(dx.lower, dy.lower), tops);
}

/// True when x = x|_{1..k} . x|_{k+1..n}.
inline bool dot_splits_at(const Surjection& x, std::size_t k) {
  const Letter top = x.arity();
  bool top_left = false, top_right = false;
  Letter left_max = 0, right_min = top;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    const Letter v = x(i);
    if (i <= k) {
      if (v == top) top_left = true;
      else left_max = std::max(left_max, v);
    } else {
      if (v == top) top_right = true;
      else right_min = std::min(right_min, v);
    }
  }
  return top_left && top_right && left_max < right_min;
}

inline bool is_dot_decomposable(const Surjection& x) {
  for (std::size_t k = 1; k < x.size(); ++k)
    if (dot_splits_at(x, k)) return true;
  return false;
}

inline bool is_indecomposable(const Surjection& x) { return !x.empty() && !is_dot_decomposable(x); }

/// The unique factorization x = x^1 . ... . x^p into indecomposables with
/// x^2, ..., x^p irreducible. For irreducible x every factor is irreducible.
inline std::vector<Surjection> dot_factorization(const Surjection& x) {
  if (x.empty()) throw degenerate_input_error("dot factorization of the empty word");
  std::vector<Surjection> tail;
  Surjection rest = x;
  for (;;) {
    std::size_t cut = 0;
    for (std::size_t k = rest.size() - 1; k >= 1; --k) {
      if (dot_splits_at(rest, k) && is_irreducible(restrict_range(rest, k + 1, rest.size()))) {
        cut = k;
        break;
      }
    }
    if (cut == 0) break;
    tail.push_back(restrict_range(rest, cut + 1, rest.size()));
    rest = restrict_range(rest, 1, cut);
  }
  tail.push_back(rest);
  std::reverse(tail.begin(), tail.end());
  return tail;
}

/// Every factorization of x into indecomposables (not unique in general:
/// (2,1,2) = (1).(1,2) = (2,1).(1)).
inline std::vector<std::vector<Surjection>> dot_factorizations(const Surjection& x) {
  if (x.empty()) throw degenerate_input_error("dot factorization of the empty word");
  std::vector<std::vector<Surjection>> out;
  if (is_indecomposable(x)) out.push_back({x});
  for (std::size_t k = 1; k < x.size(); ++k) {
    if (!dot_splits_at(x, k)) continue;
    auto head = restrict_range(x, 1, k);
    if (!is_indecomposable(head)) continue;
    for (auto& rest : dot_factorizations(restrict_range(x, k + 1, x.size()))) {
      rest.insert(rest.begin(), head);
      out.push_back(std::move(rest));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Weak Bruhat order on ST_n^r

/// All t_i o x with max x^{-1}(i) < min x^{-1}(i+1).
inline std::vector<Surjection> bruhat_covers(const Surjection& x) {
  std::vector<Surjection> out;
  const Letter r = x.arity();
  std::vector<std::size_t> first(static_cast<std::size_t>(r) + 2, x.size() + 1), last(static_cast<std::size_t>(r) + 2, 0);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    auto v = static_cast<std::size_t>(x(i));
    first[v] = std::min(first[v], i);
    last[v] = std::max(last[v], i);
  }
  for (Letter i = 1; i < r; ++i) {
    if (last[static_cast<std::size_t>(i)] < first[static_cast<std::size_t>(i) + 1]) {
      std::vector<Letter> w(x.begin(), x.end());
      for (auto& v : w) {
        if (v == i) v = i + 1;
        else if (v == i + 1) v = i;
      }
      out.push_back(Surjection::unchecked(std::move(w), r));
    }
  }
  return out;
}

/// x <= y in the weak Bruhat order; throws when x and y live in different ST_n^r.
inline bool bruhat_leq(const Surjection& x, const Surjection& y) {
  if (x.size() != y.size() || x.arity() != y.arity())
    throw incomparable_error("Bruhat comparison needs equal length and arity");
  std::set<Surjection> seen{x};
  std::deque<Surjection> queue{x};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    if (cur == y) return true;
    for (auto& c : bruhat_covers(cur))
      if (seen.insert(c).second) queue.push_back(std::move(c));
  }
  return false;
}

inline bool bruhat_less(const Surjection& x, const Surjection& y) { return x != y && bruhat_leq(x, y); }

// ---------------------------------------------------------------------------
// Enumeration

/// ST_n in canonical order (Fubini-many words).
inline std::vector<Surjection> all_surjections(int n) {
  std::vector<Surjection> out;
  if (n <= 0) return out;
  std::vector<Letter> w(static_cast<std::size_t>(n), 0);
  // assign value v to a non-empty subset of the still-free positions
  auto rec = [&](auto&& self, unsigned free_mask, Letter v) -> void {
    if (free_mask == 0) {
      out.push_back(Surjection::unchecked(w, v - 1));
      return;
    }
    for (unsigned sub = free_mask; sub; sub = (sub - 1) & free_mask) {
      for (int i = 0; i < n; ++i)
        if (sub >> i & 1u) w[static_cast<std::size_t>(i)] = v;
      self(self, free_mask & ~sub, v + 1);
    }
  };
  rec(rec, (1u << n) - 1u, 1);
  std::sort(out.begin(), out.end());
  return out;
}

/// ST_n^r in canonical order.
inline std::vector<Surjection> all_surjections(int n, Letter r) {
  std::vector<Surjection> out;
  for (auto& x : all_surjections(n))
    if (x.arity() == r) out.push_back(std::move(x));
  return out;
}

}  // namespace surj
