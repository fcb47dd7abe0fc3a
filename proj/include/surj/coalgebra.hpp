#pragma once

// The deconcatenation-by-values coproduct on K[ST], its reduced powers, the
// primitive projector E, and the unital infinitesimal structure with x.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "surj/linear_combination.hpp"
#include "surj/words.hpp"

namespace surj {

/// Delta(x) = sum_{i=1}^{r-1} x|^{1..i} (x) x|^{i+1..r}; zero when r = 1.
inline TensorCombination coproduct(const Surjection& x) {
  if (x.empty()) throw degenerate_input_error("coproduct of the empty word");
  TensorCombination out;
  for (Letter i = 1; i < x.arity(); ++i)
    out.add({corestrict_range(x, 1, i), corestrict_range(x, i + 1, x.arity())}, 1);
  return out;
}

inline TensorCombination coproduct(const LinearCombination& a) {
  TensorCombination out;
  for (const auto& [x, c] : a) out.add_scaled(coproduct(x), c);
  return out;
}

/// Delta^+ on ST^+: 1 (x) x + x (x) 1 + Delta(x); the empty word is the unit.
inline TensorCombination coproduct_plus(const Surjection& x) {
  TensorCombination out;
  if (x.empty()) {
    out.add({x, x}, 1);
    return out;
  }
  out.add({Surjection{}, x}, 1);
  out.add({x, Surjection{}}, 1);
  out += coproduct(x);
  return out;
}

inline TensorCombination coproduct_plus(const LinearCombination& a) {
  TensorCombination out;
  for (const auto& [x, c] : a) out.add_scaled(coproduct_plus(x), c);
  return out;
}

/// Applies Delta to tensor factor `slot` of every term.
inline TensorCombination apply_coproduct_at(const TensorCombination& t, std::size_t slot) {
  TensorCombination out;
  for (const auto& [key, c] : t) {
    for (const auto& [pair, d] : coproduct(key[slot])) {
      TensorCombination::Key k;
      k.insert(k.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(slot));
      k.insert(k.end(), pair.begin(), pair.end());
      k.insert(k.end(), key.begin() + static_cast<std::ptrdiff_t>(slot) + 1, key.end());
      out.add(k, c * d);
    }
  }
  return out;
}

/// Reduced power: Delta^1 = Id, Delta^i = (Id^{(x) i-1} (x) Delta) o Delta^{i-1}.
inline TensorCombination reduced_coproduct_power(const LinearCombination& a, std::size_t i) {
  if (i < 1) throw input_error("reduced coproduct powers start at 1");
  TensorCombination t;
  for (const auto& [x, c] : a) t.add({x}, c);
  for (std::size_t k = 2; k <= i; ++k) t = apply_coproduct_at(t, k - 2);
  return t;
}

inline bool is_primitive(const LinearCombination& a) { return coproduct(a).is_zero(); }

/// Multiplies each tensor term out with x.
inline LinearCombination concat_tensor(const TensorCombination& t) {
  LinearCombination out;
  for (const auto& [key, c] : t) out.add(concat(std::span<const Surjection>(key)), c);
  return out;
}

/// E(x) = sum over value cuts 0 < l_1 < ... < l_p < r of (-1)^p x^l.
inline LinearCombination eulerian_projector(const Surjection& x) {
  if (x.empty()) throw degenerate_input_error("E of the empty word");
  LinearCombination out;
  const unsigned cut_slots = static_cast<unsigned>(x.arity() - 1);
  std::vector<Letter> cuts;
  for (unsigned mask = 0; mask < (1u << cut_slots); ++mask) {
    cuts.clear();
    for (unsigned b = 0; b < cut_slots; ++b)
      if (mask >> b & 1u) cuts.push_back(static_cast<Letter>(b) + 1);
    out.add(value_split(x, cuts), (cuts.size() % 2 == 0) ? 1 : -1);
  }
  return out;
}

inline LinearCombination eulerian_projector(const LinearCombination& a) {
  return lincomb_map(a, [](const Surjection& x) { return eulerian_projector(x); });
}

/// Multilinear extension of f to every tensor factor.
template <typename F>
TensorCombination tensor_map(const TensorCombination& t, F&& f) {
  TensorCombination out;
  for (const auto& [key, c] : t) {
    TensorCombination acc{{TensorCombination::Key{}, c}};
    for (const auto& x : key) {
      const LinearCombination image = f(x);
      TensorCombination next;
      for (const auto& [k, d] : acc)
        for (const auto& [y, e] : image) {
          auto longer = k;
          longer.push_back(y);
          next.add(longer, d * e);
        }
      acc = std::move(next);
    }
    out += acc;
  }
  return out;
}

/// sum_{j=1}^{r} x^j o E^{(x) j} o Delta^j; the identity on K[ST].
inline LinearCombination eulerian_reconstruction(const LinearCombination& a) {
  LinearCombination out;
  std::size_t top = 0;
  for (const auto& [x, c] : a) top = std::max(top, static_cast<std::size_t>(x.arity()));
  for (std::size_t j = 1; j <= top; ++j)
    out += concat_tensor(tensor_map(reduced_coproduct_power(a, j),
                                    [](const Surjection& x) { return eulerian_projector(x); }));
  return out;
}

}  // namespace surj
