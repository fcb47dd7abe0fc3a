#pragma once

// Exhaustive relation checkers over all tuples of surjections up to a total
// degree. Tuples are visited by increasing total degree, then by composition
// and word order, and a suite stops at its first failure, so the reported
// counterexample has minimal total degree.

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "surj/coalgebra.hpp"
#include "surj/linear_combination.hpp"
#include "surj/products.hpp"
#include "surj/shuffles.hpp"
#include "surj/words.hpp"

namespace surj {

struct Counterexample {
  std::string relation;
  std::vector<Surjection> arguments;
  std::size_t total_degree = 0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::size_t checked = 0;
  std::optional<Counterexample> counterexample;

  bool pass() const noexcept { return !counterexample; }
};

namespace detail {

inline const std::vector<Surjection>& words_of_length(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Surjection>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, all_surjections(n)).first;
  return it->second;
}

inline void compositions_of(int total, std::size_t parts, std::vector<int>& cur,
                            const std::function<void(const std::vector<int>&)>& f) {
  if (cur.size() + 1 == parts) {
    if (total >= 1) {
      cur.push_back(total);
      f(cur);
      cur.pop_back();
    }
    return;
  }
  for (int first = 1; first <= total - static_cast<int>(parts - cur.size() - 1); ++first) {
    cur.push_back(first);
    compositions_of(total - first, parts, cur, f);
    cur.pop_back();
  }
}

}  // namespace detail

/// Visits every k-tuple of nonempty surjections whose lengths sum to `total`;
/// stops as soon as f returns false. Returns false if it was stopped.
inline bool for_each_tuple(std::size_t k, int total, const std::function<bool(std::span<const Surjection>)>& f) {
  if (k == 0) return true;
  bool go = true;
  std::vector<int> cur;
  detail::compositions_of(total, k, cur, [&](const std::vector<int>& lengths) {
    if (!go) return;
    std::vector<Surjection> tuple(k);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (!go) return;
      if (i == k) {
        go = f(tuple);
        return;
      }
      for (const auto& w : detail::words_of_length(lengths[i])) {
        tuple[i] = w;
        self(self, i + 1);
        if (!go) return;
      }
    };
    rec(rec, 0);
  });
  return go;
}

/// Records checks and the first failure.
class Checker {
 public:
  explicit Checker(std::string suite) { report_.suite = std::move(suite); }

  bool failed() const noexcept { return report_.counterexample.has_value(); }

  bool expect(bool ok, const std::string& relation, std::span<const Surjection> args, const std::string& detail = {}) {
    ++report_.checked;
    if (ok || failed()) return ok;
    Counterexample c;
    c.relation = relation;
    c.arguments.assign(args.begin(), args.end());
    for (const auto& a : args) c.total_degree += a.size();
    c.detail = detail;
    report_.counterexample = std::move(c);
    return false;
  }

  template <typename T>
  bool expect_equal(const T& lhs, const T& rhs, const std::string& relation, std::span<const Surjection> args) {
    if (lhs == rhs) return expect(true, relation, args);
    return expect(false, relation, args, "lhs = " + lhs.to_string() + "; rhs = " + rhs.to_string());
  }

  SuiteReport report() const { return report_; }

 private:
  SuiteReport report_;
};

/// Runs `body` on all k-tuples with total degree from k up to `bound`, in order.
inline void sweep(Checker& chk, std::size_t k, int bound,
                  const std::function<void(Checker&, std::span<const Surjection>)>& body) {
  for (int total = static_cast<int>(k); total <= bound && !chk.failed(); ++total)
    for_each_tuple(k, total, [&](std::span<const Surjection> t) {
      body(chk, t);
      return !chk.failed();
    });
}

// ---------------------------------------------------------------- relations

inline SuiteReport dendriform_suite(int bound, const OpFamily& fam = {}) {
  Checker chk("dendriform");
  auto L = [&](const LinearCombination& a, const LinearCombination& b) { return multiply(Product::left, a, b, fam); };
  auto R = [&](const LinearCombination& a, const LinearCombination& b) {
    return multiply(Product::weak_right, a, b, fam);
  };
  sweep(chk, 3, bound, [&](Checker& c, std::span<const Surjection> t) {
    const LinearCombination a = t[0], b = t[1], cc = t[2];
    c.expect_equal(L(L(a, b), cc), L(a, L(b, cc) + R(b, cc)), "(a<b)<c = a<(b<c + b>=c)", t) &&
        c.expect_equal(L(R(a, b), cc), R(a, L(b, cc)), "(a>=b)<c = a>=(b<c)", t) &&
        c.expect_equal(R(L(a, b) + R(a, b), cc), R(a, R(b, cc)), "(a<b + a>=b)>=c = a>=(b>=c)", t);
  });
  return chk.report();
}

inline SuiteReport tridendriform_suite(int bound, const OpFamily& fam = {}) {
  Checker chk("tridendriform");
  auto op = [&](Product p) {
    return [&fam, p](const LinearCombination& a, const LinearCombination& b) { return multiply(p, a, b, fam); };
  };
  auto L = op(Product::left), R = op(Product::right), M = op(Product::middle);
  auto W = op(Product::weak_right), S = op(Product::associative);
  const QPolynomial& q = fam.q;
  for (int total = 2; total <= bound && !chk.failed(); ++total)
    for_each_tuple(2, total, [&](std::span<const Surjection> t) {
      const LinearCombination a = t[0], b = t[1];
      chk.expect_equal(W(a, b), q * M(a, b) + R(a, b), "a>=b = q a.b + a>b", t) &&
          chk.expect_equal(S(a, b), L(a, b) + R(a, b) + q * M(a, b), "a*b = a<b + a>b + q a.b", t);
      // only the symbolic family can be specialized
      if (fam.source == nullptr && fam.q == QPolynomial::q())
        for (long long v : {0LL, 1LL, -1LL, 2LL})
          for (Product p : {Product::right, Product::middle, Product::left})
            chk.expect_equal(multiply(p, t[0], t[1], OpFamily{QPolynomial(v), nullptr}),
                             multiply(p, t[0], t[1], fam).specialize(QPolynomial(v)),
                             product_name(p) + " specializes at q = " + std::to_string(v), t);
      return !chk.failed();
    });
  for (int total = 3; total <= bound && !chk.failed(); ++total)
    for_each_tuple(3, total, [&](std::span<const Surjection> t) {
      const LinearCombination a = t[0], b = t[1], c = t[2];
      chk.expect_equal(L(L(a, b), c), L(a, L(b, c) + R(b, c) + q * M(b, c)), "(a<b)<c = a<(b<c + b>c + q b.c)", t) &&
          chk.expect_equal(L(R(a, b), c), R(a, L(b, c)), "(a>b)<c = a>(b<c)", t) &&
          chk.expect_equal(R(L(a, b) + R(a, b) + q * M(a, b), c), R(a, R(b, c)), "(a<b + a>b + q a.b)>c = a>(b>c)",
                           t) &&
          chk.expect_equal(M(M(a, b), c), M(a, M(b, c)), "(a.b).c = a.(b.c)", t) &&
          chk.expect_equal(M(R(a, b), c), R(a, M(b, c)), "(a>b).c = a>(b.c)", t) &&
          chk.expect_equal(M(L(a, b), c), M(a, R(b, c)), "(a<b).c = a.(b>c)", t) &&
          chk.expect_equal(L(M(a, b), c), M(a, L(b, c)), "(a.b)<c = a.(b<c)", t);
      return !chk.failed();
    });
  return chk.report();
}

/// Delta^+(x o y) against sum (x1 * y1) (x) (x2 o y2), with (x*y) (x) (1 o 1) read as (x o y) (x) 1.
inline TensorCombination bialgebra_rhs(Product p, const Surjection& x, const Surjection& y, const OpFamily& fam) {
  TensorCombination out;
  for (const auto& [xs, c] : coproduct_plus(x))
    for (const auto& [ys, d] : coproduct_plus(y)) {
      if (xs[1].empty() && ys[1].empty()) {
        out.add_scaled(TensorCombination::tensor(multiply(p, x, y, fam), Surjection{}), c * d);
        continue;
      }
      out.add_scaled(TensorCombination::tensor(multiply(Product::associative, xs[0], ys[0], fam),
                                               multiply(p, xs[1], ys[1], fam)),
                     c * d);
    }
  return out;
}

inline SuiteReport bialgebra_suite(int bound, const OpFamily& fam = {}) {
  Checker chk("bialgebra");
  sweep(chk, 2, bound, [&](Checker& c, std::span<const Surjection> t) {
    for (Product p : {Product::weak_right, Product::left, Product::middle, Product::right, Product::associative})
      if (!c.expect_equal(coproduct_plus(multiply(p, t[0], t[1], fam)), bialgebra_rhs(p, t[0], t[1], fam),
                          "Delta(x " + product_name(p) + " y) = sum (x1*y1)(x)(x2 " + product_name(p) + " y2)", t))
        return;
  });
  return chk.report();
}

/// Delta^+(x*y) = sum x1 (x) x2*y + sum x*y1 (x) y2 - x (x) y for the concatenation.
inline TensorCombination infinitesimal_rhs(const Surjection& x, const Surjection& y) {
  TensorCombination out;
  for (const auto& [xs, c] : coproduct_plus(x)) out.add({xs[0], concat(xs[1], y)}, c);
  for (const auto& [ys, c] : coproduct_plus(y)) out.add({concat(x, ys[0]), ys[1]}, c);
  out.add({x, y}, -1);
  return out;
}

inline SuiteReport infinitesimal_suite(int bound) {
  Checker chk("infinitesimal");
  sweep(chk, 2, bound, [&](Checker& c, std::span<const Surjection> t) {
    c.expect_equal(coproduct_plus(concat(t[0], t[1])), infinitesimal_rhs(t[0], t[1]),
                   "Delta+(x*y) = sum x1(x)x2*y + sum x*y1(x)y2 - x(x)y", t);
  });
  return chk.report();
}

/// Coassociativity and the calculus of E.
inline SuiteReport coalgebra_suite(int bound) {
  Checker chk("coalgebra");
  sweep(chk, 1, bound, [&](Checker& c, std::span<const Surjection> t) {
    const LinearCombination x = t[0];
    TensorCombination once;
    once.add({t[0]}, 1);
    const TensorCombination d = apply_coproduct_at(once, 0);
    const LinearCombination e = eulerian_projector(x);
    c.expect_equal(apply_coproduct_at(d, 0), apply_coproduct_at(d, 1), "(Delta(x)Id)Delta = (Id(x)Delta)Delta", t) &&
        c.expect_equal(eulerian_projector(e), e, "E(E(x)) = E(x)", t) &&
        c.expect(is_primitive(e), "E(x) is primitive", t, "Delta(E(x)) = " + coproduct(e).to_string()) &&
        c.expect_equal(eulerian_reconstruction(x), x, "x = sum_j x^j E^j Delta^j (x)", t);
  });
  sweep(chk, 2, bound, [&](Checker& c, std::span<const Surjection> t) {
    const LinearCombination e = eulerian_projector(concat(t[0], t[1]));
    c.expect(e.is_zero(), "E(x*y) = 0", t, "E = " + e.to_string());
  });
  return chk.report();
}

// ------------------------------------------------------------------ braces

using BraceOp = std::function<LinearCombination(const LinearCombination&, std::span<const LinearCombination>)>;

/// Right side of the brace relation: sum over 0 <= i_1 <= j_1 <= ... <= j_n <= m.
inline LinearCombination brace_relation_rhs(const LinearCombination& x, std::span<const LinearCombination> ys,
                                            std::span<const LinearCombination> zs, const BraceOp& M) {
  LinearCombination out;
  std::vector<LinearCombination> args;
  const std::size_t n = ys.size(), m = zs.size();
  auto rec = [&](auto&& self, std::size_t k, std::size_t from) -> void {
    if (k == n) {
      const std::size_t mark = args.size();
      for (std::size_t j = from; j < m; ++j) args.push_back(zs[j]);
      out += M(x, args);
      args.resize(mark);
      return;
    }
    for (std::size_t i = from; i <= m; ++i)
      for (std::size_t j = i; j <= m; ++j) {
        const std::size_t mark = args.size();
        for (std::size_t s = from; s < i; ++s) args.push_back(zs[s]);
        args.push_back(M(ys[k], zs.subspan(i, j - i)));
        self(self, k + 1, j);
        args.resize(mark);
      }
  };
  rec(rec, 0, 0);
  return out;
}

inline SuiteReport brace_suite(int bound, const OpFamily& fam = {}) {
  Checker chk("brace");
  const BraceOp M = [&](const LinearCombination& x, std::span<const LinearCombination> ys) {
    return brace(x, ys, fam);
  };
  for (int total = 1; total <= bound && !chk.failed(); ++total) {
    for_each_tuple(1, total, [&](std::span<const Surjection> t) {
      const LinearCombination x = t[0];
      return chk.expect_equal(M(x, {}), x, "M10 = Id", t);
    });
    for (std::size_t k = 3; static_cast<int>(k) <= total && !chk.failed(); ++k)
      for_each_tuple(k, total, [&](std::span<const Surjection> t) {
        const std::vector<LinearCombination> all(t.begin(), t.end());
        const std::span<const LinearCombination> s(all);
        for (std::size_t n = 1; n + 2 <= k; ++n) {
          const auto ys = s.subspan(1, n), zs = s.subspan(1 + n);
          if (!chk.expect_equal(M(M(all[0], ys), zs), brace_relation_rhs(all[0], ys, zs, M),
                                "M1m(M1n(x;y);z) = sum M1r(x;..,M(y_k;..),..)", t))
            return false;
        }
        return true;
      });
  }
  // primitives are closed under the braces
  for (int total = 2; total <= bound && !chk.failed(); ++total)
    for (std::size_t k = 2; static_cast<int>(k) <= total && !chk.failed(); ++k)
      for_each_tuple(k, total, [&](std::span<const Surjection> t) {
        std::vector<LinearCombination> e;
        for (const auto& w : t) e.push_back(eulerian_projector(w));
        const auto b = M(e[0], std::span<const LinearCombination>(e).subspan(1));
        return chk.expect(is_primitive(b), "M1n(E(x);E(y)..) is primitive", t, "M = " + b.to_string());
      });
  return chk.report();
}

/// Right side of the distributive law: sum_{i<=j} c^{j-i} M1i(x;z_1..z_i).z_{i+1}...z_j.M1(n-j)(y;z_{j+1}..z_n),
/// with c the supplied weight (q for the law as stated).
inline LinearCombination gv_rhs(const LinearCombination& x, const LinearCombination& y,
                                std::span<const LinearCombination> zs, const QPolynomial& weight, const BraceOp& M,
                                const std::function<LinearCombination(const LinearCombination&,
                                                                      const LinearCombination&)>& dot_op) {
  const std::size_t n = zs.size();
  LinearCombination out;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) {
      LinearCombination term = M(x, zs.first(i));
      for (std::size_t k = i; k < j; ++k) term = dot_op(term, zs[k]);
      term = dot_op(term, M(y, zs.subspan(j)));
      out.add_scaled(term, weight.pow(j - i));
    }
  return out;
}

/// With the braces signed (-1)^{n-r} the distributive weight is (-q)^{j-i};
/// the braces (-1)^n M1n satisfy the same law with weight q^{j-i}.
inline SuiteReport gv_suite(int bound, const OpFamily& fam = {}) {
  Checker chk("gv");
  const BraceOp M = [&](const LinearCombination& x, std::span<const LinearCombination> ys) {
    return brace(x, ys, fam);
  };
  auto D = [&](const LinearCombination& a, const LinearCombination& b) { return multiply(Product::middle, a, b, fam); };
  for (int total = 3; total <= bound && !chk.failed(); ++total)
    for (std::size_t k = 3; static_cast<int>(k) <= total && !chk.failed(); ++k)
      for_each_tuple(k, total, [&](std::span<const Surjection> t) {
        const std::vector<LinearCombination> all(t.begin(), t.end());
        const auto zs = std::span<const LinearCombination>(all).subspan(2);
        return chk.expect_equal(M(D(all[0], all[1]), zs), gv_rhs(all[0], all[1], zs, -fam.q, M, D),
                                "M1n(x.y;z) = sum (-q)^(j-i) M1i(x;..).z..z.M1(n-j)(y;..)", t);
      });
  return chk.report();
}

}  // namespace surj
