#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library's combinatorics beyond the Surjection value type and
// the coefficient ring, so agreement is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "surj/linear_combination.hpp"
#include "surj/qpolynomial.hpp"
#include "surj/words.hpp"

namespace oracle {

using surj::Integer;
using surj::Letter;
using surj::LinearCombination;
using surj::QPolynomial;
using surj::Surjection;
using Word = std::vector<Letter>;
using Series = std::vector<Integer>;  // index = degree, entry 0 unused

// ------------------------------------------------------------ series

inline Series mul(const Series& a, const Series& b, std::size_t n) {
  Series out(n + 1, 0);
  for (std::size_t i = 0; i <= n && i < a.size(); ++i)
    for (std::size_t j = 0; i + j <= n && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// 1 / (1 + a) for a with zero constant term.
inline Series one_plus_inverse(const Series& a, std::size_t n) {
  Series out(n + 1, 0);
  out[0] = 1;
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = 1; i <= k && i < a.size(); ++i) out[k] -= a[i] * out[k - i];
  return out;
}

/// Ordered set partitions: a(n) = sum_k C(n,k) a(n-k).
inline Series fubini(std::size_t n) {
  Series a(n + 1, 0);
  a[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Integer c = 1;
    for (std::size_t k = 1; k <= m; ++k) {
      c = c * (m - k + 1) / k;
      a[m] += c * a[m - k];
    }
  }
  a[0] = 0;
  return a;
}

/// 1 + F = 1 / (1 - I): the ×-irreducibles freely generate ST.
inline Series irreducible_counts(std::size_t n) {
  const Series f = fubini(n);
  Series inv = one_plus_inverse(f, n);  // 1/(1+F) = 1 - I
  Series out(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) out[k] = -inv[k];
  return out;
}

/// Free dendriform algebra on D: F = D (1 + F)^2, so D = F / (1 + F)^2.
inline Series dendriform_generators(std::size_t n) {
  const Series f = fubini(n);
  const Series inv = one_plus_inverse(f, n);
  return mul(f, mul(inv, inv, n), n);
}

/// Free brace algebra on D with planar rooted trees: I = D / (1 - I), D = I - I^2.
inline Series brace_generators(std::size_t n) {
  const Series i = irreducible_counts(n);
  const Series sq = mul(i, i, n);
  Series out(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) out[k] = i[k] - sq[k];
  return out;
}

/// GV forms G = N/(1-N), brace nodes N = B/(1-G); with G = I this gives
/// B = I (1 - I) / (1 + I).
inline Series gv_generators(std::size_t n) {
  const Series i = irreducible_counts(n);
  Series one_minus(n + 1, 0);
  one_minus[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) one_minus[k] = -i[k];
  return mul(mul(i, one_minus, n), one_plus_inverse(i, n), n);
}

// ------------------------------------------------------------ words

inline Word standardize(const Word& w) {
  std::set<Letter> values(w.begin(), w.end());
  std::map<Letter, Letter> rank;
  Letter k = 0;
  for (Letter v : values) rank[v] = ++k;
  Word out;
  for (Letter v : w) out.push_back(rank[v]);
  return out;
}

inline Letter arity(const Word& w) { return w.empty() ? 0 : *std::max_element(w.begin(), w.end()); }

/// Every packed word of length n, by filtering all words over [1..n].
inline std::vector<Word> packed_words(std::size_t n) {
  std::vector<Word> out;
  Word w(n, 1);
  for (;;) {
    if (standardize(w) == w) out.push_back(w);
    std::size_t i = 0;
    while (i < n && w[i] == static_cast<Letter>(n)) w[i++] = 1;
    if (i == n) break;
    ++w[i];
  }
  return out;
}

inline Word subword_in(const Word& w, Letter lo, Letter hi) {
  Word out;
  for (Letter v : w)
    if (v >= lo && v <= hi) out.push_back(v);
  return standardize(out);
}

inline Word times(const Word& x, const Word& y) {
  Word out = x;
  for (Letter v : y) out.push_back(v + arity(x));
  return out;
}

/// × irreducible: no proper prefix whose values all lie below the suffix.
inline bool irreducible(const Word& w) {
  for (std::size_t k = 1; k < w.size(); ++k) {
    const Word pre(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    const Word suf(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    if (times(standardize(pre), standardize(suf)) == w) return false;
  }
  return true;
}

/// Top merge from the definition: tops of x, then tops of y shifted by |x|,
/// around the lower word lower(x) × lower(y).
inline Word dot(const Word& x, const Word& y) {
  auto lower = [](const Word& w) {
    Word out;
    for (Letter v : w)
      if (v != arity(w)) out.push_back(v);
    return out;
  };
  const Word low = times(lower(x), lower(y));
  const Letter top = arity(low) + 1;
  Word out;
  std::size_t li = 0;
  for (Letter v : x) out.push_back(v == arity(x) ? top : low[li++]);
  for (Letter v : y) out.push_back(v == arity(y) ? top : low[li++]);
  return out;
}

inline bool dot_decomposable(const Word& w) {
  for (std::size_t k = 1; k < w.size(); ++k)
    for (const auto& x : packed_words(k))
      for (const auto& y : packed_words(w.size() - k))
        if (dot(x, y) == w) return true;
  return false;
}

/// Transitive closure of the covers t_i∘f with f^{-1}(i) < f^{-1}(i+1).
inline bool bruhat_leq(const Word& x, const Word& y) {
  std::set<Word> seen{x};
  std::vector<Word> stack{x};
  while (!stack.empty()) {
    Word f = stack.back();
    stack.pop_back();
    if (f == y) return true;
    for (Letter i = 1; i < arity(f); ++i) {
      std::size_t last_i = 0, first_next = f.size();
      for (std::size_t p = 0; p < f.size(); ++p) {
        if (f[p] == i) last_i = p;
        if (f[p] == i + 1) first_next = std::min(first_next, p);
      }
      if (last_i >= first_next) continue;
      Word g = f;
      for (auto& v : g) v = v == i ? i + 1 : v == i + 1 ? i : v;
      if (seen.insert(g).second) stack.push_back(g);
    }
  }
  return false;
}

// ------------------------------------------------------------ stuffles

/// Maps f: [r+s] -> [k] surjective and strictly increasing on each block,
/// found by filtering all words. `where` picks which blocks reach the top k:
/// 'x' only the first, 'y' only the second, 'b' both, 'a' any.
inline std::vector<Word> stuffles(std::size_t r, std::size_t s, char where) {
  std::vector<Word> out;
  for (const auto& f : packed_words(r + s)) {
    bool ok = true;
    for (std::size_t i = 1; i < r + s; ++i)
      if (i != r && f[i - 1] >= f[i]) ok = false;
    if (!ok) continue;
    const Letter k = arity(f);
    const bool in_x = r > 0 && f[r - 1] == k, in_y = s > 0 && f[r + s - 1] == k;
    if ((where == 'x' && in_x && !in_y) || (where == 'y' && in_y && !in_x) || (where == 'b' && in_x && in_y) ||
        where == 'a')
      out.push_back(f);
  }
  return out;
}

inline bool is_shuffle(const Word& f) { return arity(f) == static_cast<Letter>(f.size()); }

/// sum over stuffles of q^(defect - shift) f∘(x × y)
inline LinearCombination stuffle_product(const Surjection& x, const Surjection& y, char where, int shift) {
  LinearCombination out;
  const Word xy = times(x.word(), y.word());
  for (const auto& f : stuffles(static_cast<std::size_t>(x.arity()), static_cast<std::size_t>(y.arity()), where)) {
    Word w;
    for (Letter v : xy) w.push_back(f[static_cast<std::size_t>(v) - 1]);
    const int defect = static_cast<int>(f.size()) - arity(f);
    out.add(Surjection(w), QPolynomial::monomial(1, static_cast<std::size_t>(defect - shift)));
  }
  return out;
}

inline LinearCombination right(const Surjection& x, const Surjection& y) { return stuffle_product(x, y, 'y', 0); }
inline LinearCombination left(const Surjection& x, const Surjection& y) { return stuffle_product(x, y, 'x', 0); }
inline LinearCombination middle(const Surjection& x, const Surjection& y) { return stuffle_product(x, y, 'b', 1); }
inline LinearCombination star(const Surjection& x, const Surjection& y) { return stuffle_product(x, y, 'a', 0); }

/// Shuffles of a composition: permutations increasing on each block.
inline std::set<Word> shuffles(const std::vector<int>& parts) {
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  Word p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::set<Word> out;
  do {
    bool ok = true;
    std::size_t at = 0;
    for (int b : parts) {
      for (int i = 1; i < b; ++i) ok = ok && p[at + static_cast<std::size_t>(i) - 1] < p[at + static_cast<std::size_t>(i)];
      at += static_cast<std::size_t>(b);
    }
    if (ok) out.insert(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// ------------------------------------------------------------ coalgebra

inline std::map<std::pair<Word, Word>, Integer> coproduct(const Word& x) {
  std::map<std::pair<Word, Word>, Integer> out;
  for (Letter k = 1; k < arity(x); ++k) out[{subword_in(x, 1, k), subword_in(x, k + 1, arity(x))}] += 1;
  return out;
}

/// E(x) = sum over cut sets of (-1)^{#cuts} x|_{block 1} × x|_{block 2} × ...
inline LinearCombination eulerian(const Word& x) {
  LinearCombination out;
  const Letter r = arity(x);
  for (std::uint32_t mask = 0; mask < (1u << (r - 1)); ++mask) {
    Word w;
    Letter lo = 1;
    int cuts = 0;
    for (Letter c = 1; c <= r; ++c) {
      if (c == r || (mask >> (c - 1) & 1u)) {
        w = times(w, subword_in(x, lo, c));
        lo = c + 1;
        cuts += c < r;
      }
    }
    out.add(Surjection(w), cuts % 2 ? -1 : 1);
  }
  return out;
}

// ------------------------------------------------------------ rank

/// Rank of an integer matrix modulo a prime.
inline std::size_t rank_mod(std::vector<std::vector<long long>> m, long long p) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  auto norm = [p](long long v) { return ((v % p) + p) % p; };
  auto inverse = [&](long long a) {
    long long result = 1, base = norm(a), e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && norm(m[piv][c]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const long long inv = inverse(m[rank][c]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank) continue;
      const long long factor = norm(m[r][c]) * inv % p;
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = norm(m[r][k] - factor * norm(m[rank][k]) % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
