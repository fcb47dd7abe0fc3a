#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "surj/error.hpp"

namespace surj {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact univariate polynomial in q with integer coefficients.
/// Canonical form: no trailing zero coefficients; zero is the empty sequence.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(long long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.emplace_back(c);
  }
  QPolynomial(Integer c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  explicit QPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// The indeterminate q.
  static QPolynomial q() { return QPolynomial(std::vector<Integer>{0, 1}); }
  /// c * q^k
  static QPolynomial monomial(Integer c, std::size_t k) {
    std::vector<Integer> v(k + 1, 0);
    v[k] = std::move(c);
    return QPolynomial(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  Integer coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  const Integer& leading() const { return coeffs_.back(); }

  QPolynomial& operator+=(const QPolynomial& b) {
    if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size(), 0);
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    trim();
    return *this;
  }
  QPolynomial& operator-=(const QPolynomial& b) {
    if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size(), 0);
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    trim();
    return *this;
  }
  QPolynomial& operator*=(const QPolynomial& b) { return *this = *this * b; }

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator-(QPolynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return QPolynomial(std::move(out));
  }
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// q^k where the convention q^0 = 1 holds at every specialization.
  QPolynomial pow(std::size_t k) const {
    QPolynomial out(1), base = *this;
    while (k) {
      if (k & 1u) out *= base;
      base *= base;
      k >>= 1u;
    }
    return out;
  }

  /// Substitutes a rational value for q (Horner).
  Rational eval(const Rational& value) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * value + Rational(*it);
    return acc;
  }
  Integer eval(const Integer& value) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * value + *it;
    return acc;
  }

  /// Composition p(s(q)), used to specialize q to an integer polynomial.
  QPolynomial substitute(const QPolynomial& s) const {
    QPolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + QPolynomial(*it);
    return acc;
  }

  /// Exact quotient a / b in Z[q]; throws when b does not divide a.
  friend QPolynomial divide_exact(const QPolynomial& a, const QPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<Integer> rem = a.coeffs_;
    std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
    const Integer& lead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      const std::size_t top = static_cast<std::size_t>(k + b.degree());
      if (rem[top] == 0) continue;
      if (rem[top] % lead != 0) throw std::domain_error("inexact polynomial division");
      Integer c = rem[top] / lead;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= c * b.coeffs_[j];
      quot[static_cast<std::size_t>(k)] = std::move(c);
    }
    for (const auto& r : rem)
      if (r != 0) throw std::domain_error("inexact polynomial division");
    return QPolynomial(std::move(quot));
  }

  /// Ascending powers: "1+2q-q^2"; zero prints as "0".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Integer& c = coeffs_[k];
      if (c == 0) continue;
      const bool neg = c < 0;
      const Integer mag = neg ? Integer(-c) : c;
      if (neg) out += '-';
      else if (!out.empty()) out += '+';
      if (k == 0 || mag != 1) out += mag.str();
      if (k >= 1) out += 'q';
      if (k >= 2) out += '^' + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << p.to_string(); }

}  // namespace surj
