#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "surj/qpolynomial.hpp"
#include "surj/words.hpp"

namespace surj {

/// Finite formal sum of surjections with Z[q] coefficients (an element of K[ST]).
/// Zero coefficients are never stored; the empty word stands for 1_K.
class LinearCombination {
 public:
  using Terms = std::map<Surjection, QPolynomial>;

  LinearCombination() = default;
  LinearCombination(const Surjection& x) { terms_.emplace(x, QPolynomial(1)); }  // NOLINT
  LinearCombination(const Surjection& x, QPolynomial c) { add(x, std::move(c)); }
  LinearCombination(std::initializer_list<std::pair<Surjection, QPolynomial>> terms) {
    for (const auto& [x, c] : terms) add(x, c);
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  QPolynomial coefficient(const Surjection& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? QPolynomial() : it->second;
  }

  void add(const Surjection& x, const QPolynomial& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(x, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// *this += scalar * b
  LinearCombination& add_scaled(const LinearCombination& b, const QPolynomial& scalar) {
    if (scalar.is_zero()) return *this;
    for (const auto& [x, c] : b.terms_) add(x, c * scalar);
    return *this;
  }

  LinearCombination& operator+=(const LinearCombination& b) { return add_scaled(b, 1); }
  LinearCombination& operator-=(const LinearCombination& b) { return add_scaled(b, -1); }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator-(const LinearCombination& a) { return LinearCombination().add_scaled(a, -1); }
  friend LinearCombination operator*(const QPolynomial& s, const LinearCombination& a) {
    return LinearCombination().add_scaled(a, s);
  }
  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

  /// Common word length, or nullopt when the combination is zero or inhomogeneous.
  std::optional<std::size_t> degree() const {
    if (terms_.empty()) return std::nullopt;
    const std::size_t n = terms_.begin()->first.size();
    for (const auto& [x, c] : terms_)
      if (x.size() != n) return std::nullopt;
    return n;
  }
  bool is_homogeneous() const { return is_zero() || degree().has_value(); }

  /// Substitutes q by an integer polynomial (e.g. a constant) in every coefficient.
  LinearCombination specialize(const QPolynomial& value) const {
    LinearCombination out;
    for (const auto& [x, c] : terms_) out.add(x, c.substitute(value));
    return out;
  }

  /// Substitutes a rational value for q.
  std::map<Surjection, Rational> evaluate(const Rational& value) const {
    std::map<Surjection, Rational> out;
    for (const auto& [x, c] : terms_) {
      Rational v = c.eval(value);
      if (v != 0) out.emplace(x, std::move(v));
    }
    return out;
  }

  std::string to_string() const;

 private:
  Terms terms_;
};

/// a + scalar * b
inline LinearCombination lincomb_combine(const LinearCombination& a, const LinearCombination& b,
                                         const QPolynomial& scalar) {
  LinearCombination out = a;
  return out.add_scaled(b, scalar);
}

/// Linear extension of f over the terms of a.
template <typename F>
LinearCombination lincomb_map(const LinearCombination& a, F&& f) {
  LinearCombination out;
  for (const auto& [x, c] : a) out.add_scaled(std::invoke(f, x), c);
  return out;
}

/// Bilinear extension of f over pairs of terms.
template <typename F>
LinearCombination lincomb_bimap(const LinearCombination& a, const LinearCombination& b, F&& f) {
  LinearCombination out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add_scaled(std::invoke(f, x, y), cx * cy);
  return out;
}

namespace detail {

inline bool is_monomial(const QPolynomial& c) {
  std::size_t nonzero = 0;
  for (const auto& k : c.coefficients())
    if (k != 0) ++nonzero;
  return nonzero == 1;
}

// "q(2,1,1,1,2)", " - (2,1,3)", " + (1+q)(1,2)"
inline std::string format_term(const QPolynomial& c, const std::string& body, bool first) {
  std::string out;
  QPolynomial mag = c;
  const bool negative = is_monomial(c) && c.leading() < 0;
  if (negative) mag = -c;
  if (!first) out += negative ? " - " : " + ";
  else if (negative) out += "-";
  if (mag == QPolynomial(1)) return out + body;
  if (is_monomial(mag)) return out + mag.to_string() + body;
  return out + "(" + mag.to_string() + ")" + body;
}

}  // namespace detail

inline std::string LinearCombination::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [x, c] : terms_) {
    out += detail::format_term(c, x.empty() ? std::string("1") : surj::to_string(x), first);
    first = false;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const LinearCombination& a) { return os << a.to_string(); }

/// Finite sum of k-fold tensors of surjections; the empty word is 1_K.
class TensorCombination {
 public:
  using Key = std::vector<Surjection>;
  using Terms = std::map<Key, QPolynomial>;

  TensorCombination() = default;
  TensorCombination(std::initializer_list<std::pair<Key, QPolynomial>> terms) {
    for (const auto& [k, c] : terms) add(k, c);
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  void add(const Key& k, const QPolynomial& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  TensorCombination& add_scaled(const TensorCombination& b, const QPolynomial& s) {
    for (const auto& [k, c] : b.terms_) add(k, c * s);
    return *this;
  }
  TensorCombination& operator+=(const TensorCombination& b) { return add_scaled(b, 1); }
  TensorCombination& operator-=(const TensorCombination& b) { return add_scaled(b, -1); }
  friend TensorCombination operator+(TensorCombination a, const TensorCombination& b) { return a += b; }
  friend TensorCombination operator-(TensorCombination a, const TensorCombination& b) { return a -= b; }
  friend bool operator==(const TensorCombination&, const TensorCombination&) = default;

  /// a (x) b for plain combinations.
  static TensorCombination tensor(const LinearCombination& a, const LinearCombination& b) {
    TensorCombination out;
    for (const auto& [x, cx] : a)
      for (const auto& [y, cy] : b) out.add({x, y}, cx * cy);
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      std::string body;
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) body += "⊗";
        body += k[i].empty() ? std::string("1") : surj::to_string(k[i]);
      }
      out += detail::format_term(c, body, first);
      first = false;
    }
    return out;
  }

 private:
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const TensorCombination& a) { return os << a.to_string(); }

}  // namespace surj
