#pragma once

// Exact rank of families of homogeneous linear combinations, either after
// substituting a rational value for q or over the field Q(q).

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "surj/error.hpp"
#include "surj/linear_combination.hpp"

namespace surj {

struct RankMode {
  std::optional<Rational> q;  ///< nullopt selects the symbolic rank over Q(q)

  static RankMode at(Rational value) { return RankMode{std::move(value)}; }
  static RankMode symbolic() { return RankMode{std::nullopt}; }
};

namespace detail {

inline std::map<Surjection, std::size_t> column_index(std::span<const LinearCombination> vectors) {
  std::optional<std::size_t> degree;
  std::map<Surjection, std::size_t> index;
  for (const auto& v : vectors) {
    if (v.is_zero()) continue;
    auto d = v.degree();
    if (!d || (degree && *d != *degree)) throw input_error("rank needs homogeneous vectors of one common degree");
    degree = d;
    for (const auto& [x, c] : v) index.emplace(x, 0);
  }
  std::size_t k = 0;
  for (auto& [x, i] : index) i = k++;
  return index;
}

/// Fraction-free (Bareiss) row echelon rank over an integral domain; `exact_div`
/// divides by the previous pivot, which is always exact.
template <typename Ring, typename Div>
std::size_t fraction_free_rank(std::vector<std::vector<Ring>> m, Div exact_div) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  const Ring zero{};
  Ring prev = Ring(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m[p][col] == zero) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        m[i][j] = exact_div(m[row][col] * m[i][j] - m[i][col] * m[row][j], prev);
      m[i][col] = zero;
    }
    prev = m[row][col];
    ++row;
  }
  return row;
}

}  // namespace detail

/// Rank over Q after substituting q = value; sparse Gauss-Jordan over rationals.
inline std::size_t rank_at(std::span<const LinearCombination> vectors, const Rational& value) {
  const auto index = detail::column_index(vectors);
  // pivot column -> normalized row (leading entry 1)
  std::map<std::size_t, std::map<std::size_t, Rational>> pivots;
  for (const auto& v : vectors) {
    std::map<std::size_t, Rational> row;
    for (const auto& [x, c] : v) {
      Rational e = c.eval(value);
      if (e != 0) row.emplace(index.at(x), std::move(e));
    }
    while (!row.empty()) {
      auto lead = row.begin();
      auto pit = pivots.find(lead->first);
      if (pit == pivots.end()) break;
      const Rational factor = lead->second;
      for (const auto& [j, e] : pit->second) {
        auto [it, inserted] = row.try_emplace(j, 0);
        it->second -= factor * e;
        if (it->second == 0) row.erase(it);
      }
    }
    if (row.empty()) continue;
    const Rational lead = row.begin()->second;
    for (auto& [j, e] : row) e /= lead;
    const std::size_t col = row.begin()->first;
    pivots.emplace(col, std::move(row));
  }
  return pivots.size();
}

/// Rank over Q(q) by fraction-free elimination in Z[q].
inline std::size_t rank_symbolic(std::span<const LinearCombination> vectors) {
  const auto index = detail::column_index(vectors);
  std::vector<std::vector<QPolynomial>> m;
  for (const auto& v : vectors) {
    if (v.is_zero()) continue;
    std::vector<QPolynomial> row(index.size());
    for (const auto& [x, c] : v) row[index.at(x)] = c;
    m.push_back(std::move(row));
  }
  return detail::fraction_free_rank(std::move(m), [](const QPolynomial& a, const QPolynomial& b) {
    return divide_exact(a, b);
  });
}

/// Rank over Q at integer q by fraction-free elimination in Z; an independent
/// route to rank_at for integral specializations.
inline std::size_t rank_fraction_free(std::span<const LinearCombination> vectors, const Integer& value) {
  const auto index = detail::column_index(vectors);
  std::vector<std::vector<Integer>> m;
  for (const auto& v : vectors) {
    std::vector<Integer> row(index.size(), 0);
    for (const auto& [x, c] : v) row[index.at(x)] = c.eval(value);
    m.push_back(std::move(row));
  }
  return detail::fraction_free_rank(std::move(m), [](const Integer& a, const Integer& b) { return Integer(a / b); });
}

/// Rank over Q(q) as the maximum over specializations q = 0, 1, -1, 2, -2, ...
/// A nonzero k-minor has q-degree <= k*d, so k*d+1 distinct points suffice.
inline std::size_t rank_by_specialization(std::span<const LinearCombination> vectors) {
  const auto index = detail::column_index(vectors);
  int d = 0;
  std::size_t nonzero = 0;
  for (const auto& v : vectors) {
    if (!v.is_zero()) ++nonzero;
    for (const auto& [x, c] : v) d = std::max(d, c.degree());
  }
  const std::size_t bound = std::min(nonzero, index.size());
  const std::size_t points = bound * static_cast<std::size_t>(d) + 1;
  std::size_t best = 0;
  for (std::size_t i = 0; i < points && best < bound; ++i) {
    const long long k = static_cast<long long>((i + 1) / 2);
    const Rational value = (i % 2 == 1) ? Rational(k) : Rational(-k);
    best = std::max(best, rank_at(vectors, value));
  }
  return best;
}

inline std::size_t rank(std::span<const LinearCombination> vectors, const RankMode& mode) {
  return mode.q ? rank_at(vectors, *mode.q) : rank_symbolic(vectors);
}

}  // namespace surj
