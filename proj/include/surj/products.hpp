#pragma once

// The q-tridendriform products on K[ST] and everything built from them:
// the q-associative product, the dendriform pair, the omega iterates and the
// brace operations M_{1n}.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "surj/error.hpp"
#include "surj/linear_combination.hpp"
#include "surj/shuffles.hpp"
#include "surj/words.hpp"

namespace surj {

/// Supplies SH^filter(r, s). The default reads the memoized enumeration;
/// tests swap in a perturbed source to make sure the axiom suites notice.
class StuffleSource {
 public:
  virtual ~StuffleSource() = default;
  virtual const std::vector<Surjection>& maps(int r, int s, BlockFilter filter) const {
    return cached_stuffles(r, s, filter);
  }
};

/// Drops one map from SH^filter(r, s) and leaves every other set alone.
class DroppedStuffleSource : public StuffleSource {
 public:
  DroppedStuffleSource(int r, int s, BlockFilter filter, Surjection dropped)
      : r_(r), s_(s), filter_(filter), dropped_(std::move(dropped)) {
    for (const auto& f : cached_stuffles(r, s, filter))
      if (f != dropped_) kept_.push_back(f);
  }

  const std::vector<Surjection>& maps(int r, int s, BlockFilter filter) const override {
    if (r == r_ && s == s_ && filter == filter_) return kept_;
    return cached_stuffles(r, s, filter);
  }

 private:
  int r_, s_;
  BlockFilter filter_;
  Surjection dropped_;
  std::vector<Surjection> kept_;
};

/// Parameters shared by all products: the deformation parameter (an integer
/// polynomial, q itself by default) and the stuffle source.
struct OpFamily {
  QPolynomial q = QPolynomial::q();
  std::shared_ptr<const StuffleSource> source;

  static OpFamily at(long long value) { return OpFamily{QPolynomial(value), nullptr}; }

  const std::vector<Surjection>& maps(int r, int s, BlockFilter filter) const {
    static const StuffleSource fallback;
    return (source ? *source : fallback).maps(r, s, filter);
  }
};

enum class Product {
  concat,       ///< x
  backslash,    ///< y \ z
  dot,          ///< the top-gluing product
  right,        ///< >_q
  middle,       ///< ._q
  left,         ///< <_q
  weak_right,   ///< >=_q = q ._q + >_q
  associative,  ///< *_q, the sum of the three
  shuffle,      ///< the q = 0 shuffle product on permutations and surjections
};

inline std::string product_name(Product p) {
  switch (p) {
    case Product::concat: return "concat";
    case Product::backslash: return "backslash";
    case Product::dot: return "dot";
    case Product::right: return "right";
    case Product::middle: return "middle";
    case Product::left: return "left";
    case Product::weak_right: return "weak-right";
    case Product::associative: return "associative";
    case Product::shuffle: return "shuffle";
  }
  return "?";
}

namespace detail {

// sum_{f in SH^filter(r,s)} q^{s(f) - shift} f o (x * y)
inline LinearCombination stuffle_sum(const Surjection& x, const Surjection& y, BlockFilter filter, int shift,
                                     const OpFamily& family) {
  const Surjection xy = concat(x, y);
  LinearCombination out;
  std::map<int, QPolynomial> powers;
  for (const auto& f : family.maps(x.arity(), y.arity(), filter)) {
    const int e = f.defect() - shift;
    if (e < 0) throw std::logic_error("negative q exponent in a stuffle sum");
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, family.q.pow(static_cast<std::size_t>(e))).first;
    out.add(compose(f, xy), it->second);
  }
  return out;
}

}  // namespace detail

/// Product of two words; the empty word acts as the unit where that makes
/// sense. For the one-sided products: 1 > x = x, x > 1 = 0, x < 1 = x,
/// 1 < x = 0, and x . 1 = 1 . x = 0. Pairing 1 with 1 throws.
inline LinearCombination multiply(Product p, const Surjection& x, const Surjection& y,
                                  const OpFamily& family = {}) {
  const bool ux = x.empty(), uy = y.empty();
  switch (p) {
    case Product::concat: return concat(x, y);
    case Product::backslash:
      if (ux || uy) return ux ? y : x;
      return backslash(x, y);
    case Product::dot:
    case Product::middle:
      if (ux && uy) throw undefined_unit_error("1 " + product_name(p) + " 1 is undefined");
      if (ux || uy) return {};
      if (p == Product::dot) return dot(x, y);
      return detail::stuffle_sum(x, y, BlockFilter::merged, 1, family);
    case Product::right:
    case Product::weak_right:
      if (ux && uy) throw undefined_unit_error("1 " + product_name(p) + " 1 is undefined");
      if (ux) return y;
      if (uy) return {};
      return detail::stuffle_sum(x, y, p == Product::right ? BlockFilter::right : BlockFilter::weak, 0, family);
    case Product::left:
      if (ux && uy) throw undefined_unit_error("1 < 1 is undefined");
      if (uy) return x;
      if (ux) return {};
      return detail::stuffle_sum(x, y, BlockFilter::left, 0, family);
    case Product::associative:
      if (ux || uy) return ux ? y : x;
      return detail::stuffle_sum(x, y, BlockFilter::all, 0, family);
    case Product::shuffle: {
      if (ux || uy) return ux ? y : x;
      const Surjection xy = concat(x, y);
      LinearCombination out;
      for (const auto& f : enumerate_shuffles(Composition{x.arity(), y.arity()})) out.add(compose(f, xy), 1);
      return out;
    }
  }
  throw std::logic_error("unknown product");
}

inline LinearCombination multiply(Product p, const LinearCombination& a, const LinearCombination& b,
                                  const OpFamily& family = {}) {
  return lincomb_bimap(a, b, [&](const Surjection& x, const Surjection& y) { return multiply(p, x, y, family); });
}

/// The dendriform pair obtained at q = 0, computed straight from the shuffle
/// subsets Sh^> and Sh^<.
inline LinearCombination dendriform(Product p, const Surjection& x, const Surjection& y) {
  if (p != Product::right && p != Product::left) throw input_error("dendriform products are right and left");
  if (x.empty() || y.empty()) return multiply(p, x, y, OpFamily::at(0));
  const Surjection xy = concat(x, y);
  LinearCombination out;
  const auto filter = p == Product::right ? BlockFilter::right : BlockFilter::left;
  for (const auto& f : enumerate_shuffles(Composition{x.arity(), y.arity()}, filter)) out.add(compose(f, xy), 1);
  return out;
}

inline LinearCombination dendriform(Product p, const LinearCombination& a, const LinearCombination& b) {
  return lincomb_bimap(a, b, [&](const Surjection& x, const Surjection& y) { return dendriform(p, x, y); });
}

enum class OmegaKind {
  left,        ///< y_1 < (y_2 < (... < y_n))
  right,       ///< ((y_1 > y_2) > ...) > y_n
  weak_right,  ///< ((y_1 >= y_2) >= ...) >= y_n
};

/// The omega iterates; the empty family gives the unit.
inline LinearCombination omega(std::span<const LinearCombination> ys, OmegaKind kind, const OpFamily& family = {}) {
  if (ys.empty()) return Surjection{};
  if (kind == OmegaKind::left) {
    LinearCombination acc = ys.back();
    for (std::size_t i = ys.size() - 1; i-- > 0;) acc = multiply(Product::left, ys[i], acc, family);
    return acc;
  }
  const Product p = kind == OmegaKind::right ? Product::right : Product::weak_right;
  LinearCombination acc = ys.front();
  for (std::size_t i = 1; i < ys.size(); ++i) acc = multiply(p, acc, ys[i], family);
  return acc;
}

/// Direct k-ary formula: sum over SH^filter(r_1..r_p) of q^{s(f)} f o (y_1 x ... x y_p),
/// with the filter `left` for omega^< and `weak` for the weak-right iterate.
inline LinearCombination omega_direct(std::span<const Surjection> ys, OmegaKind kind, const OpFamily& family = {}) {
  if (ys.empty()) return Surjection{};
  std::vector<int> parts;
  for (const auto& y : ys) parts.push_back(y.arity());
  const BlockFilter filter = kind == OmegaKind::left    ? BlockFilter::left
                             : kind == OmegaKind::right ? BlockFilter::right
                                                        : BlockFilter::weak;
  const Surjection word = concat(ys);
  LinearCombination out;
  for (const auto& st : enumerate_stuffles(Composition(parts), filter))
    out.add(compose(st.map, word), family.q.pow(static_cast<std::size_t>(st.defect())));
  return out;
}

/// M_{1n}(x; y_1..y_n) = sum_r (-1)^{n-r} omega^<(y_1..y_r) >= x < omega^>=(y_{r+1}..y_n).
inline LinearCombination brace(const LinearCombination& x, std::span<const LinearCombination> ys,
                               const OpFamily& family = {}) {
  const std::size_t n = ys.size();
  LinearCombination out;
  for (std::size_t r = 0; r <= n; ++r) {
    LinearCombination term = x;
    if (r > 0) term = multiply(Product::weak_right, omega(ys.first(r), OmegaKind::left, family), term, family);
    if (r < n) term = multiply(Product::left, term, omega(ys.subspan(r), OmegaKind::weak_right, family), family);
    out.add_scaled(term, (n - r) % 2 == 0 ? 1 : -1);
  }
  return out;
}

}  // namespace surj
