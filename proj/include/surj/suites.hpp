#pragma once

// Combinatorial and freeness suites, and a name-based dispatcher over every
// suite the library knows.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "surj/axioms.hpp"
#include "surj/freeness.hpp"
#include "surj/shuffles.hpp"
#include "surj/words.hpp"

namespace surj {

namespace detail {

inline std::set<Surjection> as_set(const std::vector<Surjection>& v) { return {v.begin(), v.end()}; }

/// { f o (g x 1_r) : f in fs, g in gs }
inline std::set<Surjection> compose_left(const std::vector<Surjection>& fs, const std::vector<Surjection>& gs, int r) {
  std::set<Surjection> out;
  for (const auto& f : fs)
    for (const auto& g : gs) out.insert(compose(f, concat(g, identity(r))));
  return out;
}

/// { f o (1_n x g) : f in fs, g in gs }
inline std::set<Surjection> compose_right(const std::vector<Surjection>& fs, int n, const std::vector<Surjection>& gs) {
  std::set<Surjection> out;
  for (const auto& f : fs)
    for (const auto& g : gs) out.insert(compose(f, concat(identity(n), g)));
  return out;
}

inline std::string set_string(const std::set<Surjection>& s) {
  std::string out = "{";
  for (const auto& x : s) out += (out.size() > 1 ? "," : "") + to_string(x);
  return out + "}";
}

inline std::string parts_string(const std::vector<int>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
  return out + ")";
}

inline std::vector<std::vector<int>> compositions(int total) {
  std::vector<std::vector<int>> out;
  for (std::size_t k = 1; static_cast<int>(k) <= total; ++k) {
    std::vector<int> cur;
    compositions_of(total, k, cur, [&](const std::vector<int>& c) { out.push_back(c); });
  }
  return out;
}

inline Surjection block_reversal(const std::vector<int>& parts) {
  // block i occupies the values above all later blocks
  std::vector<Letter> w;
  int above = std::accumulate(parts.begin(), parts.end(), 0);
  for (int p : parts) {
    above -= p;
    for (int i = 1; i <= p; ++i) w.push_back(above + i);
  }
  return Surjection(std::move(w));
}

}  // namespace detail

/// Grading, associativity, factorization uniqueness and closure, top
/// decompositions and the restriction identity for shuffled concatenations.
inline SuiteReport words_suite(int bound) {
  Checker chk("words");
  sweep(chk, 1, bound, [&](Checker& c, std::span<const Surjection> t) {
    const Surjection& x = t[0];
    const auto top = top_decomposition(x);
    const auto gv = gap_vector(x);
    std::size_t gap_sum = gv.head_gap + top.lambda();
    for (auto e : gv.entries) gap_sum += e;
    c.expect(insert_top(top.lower, top.positions) == x, "top decomposition rebuilds x", t) &&
        c.expect(gap_sum == x.size(), "head gap + lambda + sum of gaps = n", t) &&
        c.expect(standardize(x.word()) == x, "std is the identity on packed words", t);
    const auto irr = irreducible_factorization(x);
    c.expect(concat(std::span<const Surjection>(irr)) == x &&
                 std::all_of(irr.begin(), irr.end(), [](const Surjection& f) { return is_irreducible(f); }),
             "x = x^1 x ... x x^p with irreducible factors", t);
    const auto dots = dot_factorization(x);
    Surjection folded = dots.front();
    for (std::size_t i = 1; i < dots.size(); ++i) folded = dot(folded, dots[i]);
    bool canonical = folded == x && std::all_of(dots.begin(), dots.end(), is_indecomposable);
    for (std::size_t i = 1; i < dots.size(); ++i) canonical = canonical && is_irreducible(dots[i]);
    std::size_t with_irreducible_tail = 0;
    for (const auto& f : dot_factorizations(x))
      if (std::all_of(f.begin() + 1, f.end(), [](const Surjection& g) { return is_irreducible(g); }))
        ++with_irreducible_tail;
    c.expect(canonical && with_irreducible_tail == 1, "unique dot factorization with irreducible tail", t);
    if (is_irreducible(x))
      c.expect(std::all_of(dots.begin(), dots.end(), [](const Surjection& g) { return is_irreducible(g); }),
               "dot factors of an irreducible word are irreducible", t);
  });
  sweep(chk, 2, bound, [&](Checker& c, std::span<const Surjection> t) {
    const Surjection &x = t[0], &y = t[1];
    const auto n = x.size() + y.size();
    const Surjection xy = concat(x, y), xby = backslash(x, y), xdy = dot(x, y);
    c.expect(xy.size() == n && xy.arity() == x.arity() + y.arity(), "grading of x", t) &&
        c.expect(xby.size() == n && xby.arity() == x.arity() + y.arity(), "grading of \\", t) &&
        c.expect(xdy.size() == n && xdy.arity() == x.arity() + y.arity() - 1, "grading of .", t);
    if (is_irreducible(x) && is_irreducible(y)) c.expect(is_irreducible(xdy), "x.y irreducible for irreducible x, y", t);
    if (static_cast<int>(n) <= std::min(bound, 5))
      for (const auto& f : enumerate_shuffles(Composition{x.arity(), y.arity()})) {
        const Surjection w = compose(f, xy);
        if (!c.expect(restrict_range(w, 1, x.size()) == x && restrict_range(w, x.size() + 1, n) == y,
                      "f o (x * y) restricts to x and y", t, "f = " + to_string(f)))
          break;
      }
  });
  sweep(chk, 3, bound, [&](Checker& c, std::span<const Surjection> t) {
    const Surjection &x = t[0], &y = t[1], &z = t[2];
    c.expect(concat(concat(x, y), z) == concat(x, concat(y, z)), "x is associative", t) &&
        c.expect(backslash(backslash(x, y), z) == backslash(x, backslash(y, z)), "\\ is associative", t) &&
        c.expect(dot(dot(x, y), z) == dot(x, dot(y, z)), ". is associative", t);
  });
  return chk.report();
}

/// Gap monotonicity under value splits, monotonicity of shuffled
/// concatenation in the weak Bruhat order, and shuffles as Bruhat intervals.
inline SuiteReport order_suite(int bound) {
  Checker chk("order");
  sweep(chk, 1, std::min(bound, 5), [&](Checker& c, std::span<const Surjection> t) {
    const Surjection& x = t[0];
    const auto gv = gap_vector(x);
    const unsigned slots = static_cast<unsigned>(x.arity() - 1);
    std::vector<Letter> cuts;
    for (unsigned mask = 1; mask < (1u << slots); ++mask) {
      cuts.clear();
      for (unsigned b = 0; b < slots; ++b)
        if (mask >> b & 1u) cuts.push_back(static_cast<Letter>(b) + 1);
      if (!c.expect(!(gv < gap_vector(value_split(x, cuts))), "M(x^l) <= M(x)", t,
                    "cuts at " + to_string(Surjection::unchecked(cuts, 0))))
        break;
    }
  });
  sweep(chk, 2, std::min(bound, 5), [&](Checker& c, std::span<const Surjection> t) {
    const Surjection &x1 = t[0], &x2 = t[1];
    const Surjection xy = concat(x1, x2);
    const auto sh = enumerate_shuffles(Composition{x1.arity(), x2.arity()});
    for (const auto& s : sh)
      for (const auto& u : sh)
        if (bruhat_less(s, u) &&
            !c.expect(bruhat_less(compose(s, xy), compose(u, xy)), "s < t gives s o (x1 x x2) < t o (x1 x x2)", t,
                      to_string(s) + " < " + to_string(u)))
          return;
  });
  for (int n = 1; n <= std::min(bound, 4) && !chk.failed(); ++n) {
    const auto perms = all_surjections(n, n);
    for (const auto& parts : detail::compositions(n)) {
      const Composition comp(parts);
      const Surjection eps = epsilon(comp);
      std::set<Surjection> interval;
      for (const auto& w : perms)
        if (bruhat_leq(identity(n), w) && bruhat_leq(w, eps)) interval.insert(w);
      const auto sh = detail::as_set(enumerate_shuffles(comp));
      if (!chk.expect(sh == interval, "Sh(n_1..n_p) = [1_n, eps(n_1..n_p)]", {},
                      "composition " + detail::parts_string(parts) + ": Sh = " + detail::set_string(sh) +
                          "; interval = " + detail::set_string(interval)))
        break;
    }
  }
  // item (2) last: everything above is settled if it fails
  sweep(chk, 2, std::min(bound, 5), [&](Checker& c, std::span<const Surjection> t) {
    const Surjection &x1 = t[0], &x2 = t[1];
    const Surjection xy = concat(x1, x2);
    const auto sh = enumerate_shuffles(Composition{x1.arity(), x2.arity()});
    for (const auto& y1 : all_surjections(static_cast<int>(x1.size()), x1.arity()))
      for (const auto& y2 : all_surjections(static_cast<int>(x2.size()), x2.arity())) {
        if (!bruhat_leq(x1, y1) || !bruhat_leq(x2, y2)) continue;
        const bool strict = x1 != y1 || x2 != y2;
        const Surjection yy = concat(y1, y2);
        for (const auto& s : sh) {
          const bool ok = strict ? bruhat_less(compose(s, xy), compose(s, yy)) : compose(s, xy) == compose(s, yy);
          if (!c.expect(ok, "x_i <= y_i gives s o (x1 x x2) <= s o (y1 x y2), strictly if some x_i < y_i", t,
                        "y = " + to_string(y1) + " " + to_string(y2) + ", s = " + to_string(s)))
            return;
        }
      }
  });
  return chk.report();
}

/// Set identities among shuffles and stuffles.
inline SuiteReport shuffle_sets_suite(int bound) {
  Checker chk("shuffle-sets");
  auto sh = [](std::vector<int> parts, BlockFilter f = BlockFilter::all) {
    return enumerate_shuffles(Composition(std::move(parts)), f);
  };
  auto fail_detail = [](const std::string& where, const std::set<Surjection>& a, const std::set<Surjection>& b) {
    return where + ": " + detail::set_string(a) + " vs " + detail::set_string(b);
  };
  const int cap = std::min(bound, 3);
  for (int n = 1; n <= cap && !chk.failed(); ++n)
    for (int m = 1; m <= cap && !chk.failed(); ++m)
      for (int r = 1; r <= cap && !chk.failed(); ++r) {
        const std::string where = "(n,m,r) = " + detail::parts_string({n, m, r});
        const auto mid = detail::as_set(sh({n, m, r}));
        const auto left = detail::compose_left(sh({n + m, r}), sh({n, m}), r);
        const auto right = detail::compose_right(sh({n, m + r}), n, sh({m, r}));
        using F = BlockFilter;
        const auto a1 = detail::compose_left(sh({n + m, r}, F::right), sh({n, m}), r);
        const auto b1 = detail::compose_right(sh({n, m + r}, F::right), n, sh({m, r}, F::right));
        const auto a2 = detail::compose_left(sh({n + m, r}, F::left), sh({n, m}, F::right), r);
        const auto b2 = detail::compose_right(sh({n, m + r}, F::right), n, sh({m, r}, F::left));
        const auto a3 = detail::compose_left(sh({n + m, r}, F::left), sh({n, m}, F::left), r);
        const auto b3 = detail::compose_right(sh({n, m + r}, F::left), n, sh({m, r}));
        chk.expect(left == mid && mid == right, "Sh(n+m,r)(Sh(n,m) x 1) = Sh(n,m,r) = Sh(n,m+r)(1 x Sh(m,r))", {},
                   fail_detail(where, left, right)) &&
            chk.expect(a1 == b1, "Sh>(n+m,r)(Sh(n,m) x 1) = Sh>(n,m+r)(1 x Sh>(m,r))", {}, fail_detail(where, a1, b1)) &&
            chk.expect(a2 == b2, "Sh<(n+m,r)(Sh>(n,m) x 1) = Sh>(n,m+r)(1 x Sh<(m,r))", {}, fail_detail(where, a2, b2)) &&
            chk.expect(a3 == b3, "Sh<(n+m,r)(Sh<(n,m) x 1) = Sh<(n,m+r)(1 x Sh(m,r))", {}, fail_detail(where, a3, b3));
      }
  for (int total = 2; total <= std::max(bound, 2) && !chk.failed(); ++total)
    for (int r = 1; r < total && !chk.failed(); ++r) {
      const int s = total - r;
      const std::string where = "(r,s) = " + detail::parts_string({r, s});
      if (total <= 8) {
        const auto count = sh({r, s}).size();
        Integer binom = 1;
        for (int i = 1; i <= r; ++i) binom = binom * (s + i) / i;
        chk.expect(Integer(count) == binom, "|Sh(r,s)| = binomial(r+s,r)", {}, where);
      }
      if (total > 6) continue;
      auto maps = [&](BlockFilter f) {
        std::vector<Surjection> out;
        for (auto& st : enumerate_stuffles(Composition{r, s}, f)) out.push_back(std::move(st.map));
        return out;
      };
      const auto all = maps(BlockFilter::all), gt = maps(BlockFilter::right), lt = maps(BlockFilter::left),
                 eq = maps(BlockFilter::merged), ge = maps(BlockFilter::weak);
      std::set<Surjection> parts(gt.begin(), gt.end());
      parts.insert(lt.begin(), lt.end());
      parts.insert(eq.begin(), eq.end());
      std::set<Surjection> weak(gt.begin(), gt.end());
      weak.insert(eq.begin(), eq.end());
      std::vector<Surjection> merged_shuffles;
      for (const auto& f : eq)
        if (f.defect() == 1) merged_shuffles.push_back(f);
      chk.expect(parts == detail::as_set(all) && gt.size() + lt.size() + eq.size() == all.size(),
                 "SH = SH> + SH< + SH. (disjoint)", {}, where) &&
          chk.expect(weak == detail::as_set(ge) && gt.size() + eq.size() == ge.size(), "SH>= = SH> + SH. (disjoint)", {},
                     where) &&
          chk.expect(merged_shuffles == sh({r, s}, BlockFilter::merged), "Sh.(r,s) = SH.(r,s) of defect 1", {}, where);
    }
  for (int total = 1; total <= std::min(bound, 6) && !chk.failed(); ++total)
    for (const auto& parts : detail::compositions(total))
      if (!chk.expect(epsilon(Composition(parts)) == detail::block_reversal(parts), "eps recursion = block reversal",
                      {}, detail::parts_string(parts)))
        break;
  return chk.report();
}

/// Bases, eta and psi, normal forms and the GV homomorphism property of psi.
inline SuiteReport freeness_suite(int bound, const OpFamily& fam = {}) {
  Checker chk("freeness");
  const BasisTables tables(bound);
  for (int n = 1; n <= bound && !chk.failed(); ++n) {
    const auto r = freeness_report(n, {Rational(0), Rational(1), Rational(-1), Rational(2), std::nullopt}, tables);
    chk.expect(r.pass, "ranks and normal-form counts equal |Irr_n|", {}, "n = " + std::to_string(n));
    const auto& lv = tables.level(n);
    for (const auto& x : lv.irr) {
      const Surjection one[] = {x};
      const auto e = eta(x, tables), p = psi(x, tables, fam), p0 = psi(x, tables, OpFamily::at(0));
      bool coherent = true;
      for (const auto& [w, c] : p)
        if (w.arity() == x.arity()) coherent = coherent && c.is_constant() && c == p0.coefficient(w);
      for (const auto& [w, c] : p0)
        if (w.arity() == x.arity()) coherent = coherent && p.coefficient(w) == c;
      if (!(chk.expect(is_primitive(e), "eta(x) is primitive", one, e.to_string()) &&
            chk.expect(is_primitive(p), "psi(x) is primitive", one, p.to_string()) &&
            chk.expect(!tables.in_d(x) || e.coefficient(x) == 1, "eta(x) has coefficient 1 on x in D", one) &&
            chk.expect(!tables.in_b(x) || p.coefficient(x) == 1, "psi(x) has coefficient 1 on x in B", one) &&
            chk.expect(coherent, "top-arity coefficients of psi^q(x) are those of psi^0(x)", one, p.to_string())))
        break;
    }
    std::set<Surjection> hit;
    for (const auto& t : brace_normal_forms(n, tables)) {
      const Surjection x = evaluate_in_irr(t);
      const Surjection one[] = {x};
      if (!(chk.expect(hit.insert(x).second && is_irreducible(x), "M(D) evaluates bijectively onto Irr_n", one,
                       t.to_string()) &&
            chk.expect_equal(evaluate_in_st(t, OpFamily::at(0)), eta(x, tables), "eta(tree) = tree in Prim(ST)", one)))
        break;
    }
    hit.clear();
    for (const auto& t : gv_normal_forms(n, tables)) {
      const Surjection x = evaluate_in_irr(t);
      const Surjection one[] = {x};
      if (!(chk.expect(hit.insert(x).second && is_irreducible(x), "G(B) evaluates bijectively onto Irr_n", one,
                       t.to_string()) &&
            chk.expect_equal(evaluate_in_st(t, fam), psi(x, tables, fam), "psi(tree) = tree in Prim(ST)", one)))
        break;
    }
  }
  // psi(x.y) = psi(x) ._q psi(y); E(x) ._q E(y) stays primitive
  sweep(chk, 2, bound, [&](Checker& c, std::span<const Surjection> t) {
    const auto m = multiply(Product::middle, eulerian_projector(t[0]), eulerian_projector(t[1]), fam);
    c.expect(is_primitive(m), "E(x) . E(y) is primitive", t, m.to_string());
    if (!is_irreducible(t[0]) || !is_irreducible(t[1])) return;
    c.expect_equal(psi(dot(t[0], t[1]), tables, fam),
                   multiply(Product::middle, psi(t[0], tables, fam), psi(t[1], tables, fam), fam),
                   "psi(x.y) = psi(x) . psi(y)", t);
  });
  // brace homomorphisms on generators: eta over D at q = 0, psi over B at q
  for (std::size_t k = 2; k <= 3; ++k)
    sweep(chk, k, bound, [&](Checker& c, std::span<const Surjection> t) {
      std::vector<LinearCombination> es;
      for (const auto& w : t) es.push_back(eulerian_projector(w));
      const auto m = brace(es[0], std::span<const LinearCombination>(es).subspan(1), fam);
      c.expect(is_primitive(m), "M(E(x); E(y)..) is primitive", t, m.to_string());
      if (!std::all_of(t.begin(), t.end(), [](const Surjection& w) { return is_irreducible(w); })) return;
      const Surjection w = backslash(t[0], concat(t.subspan(1)));
      if (tables.in_d(t[0])) {
        std::vector<LinearCombination> zs;
        for (const auto& z : t.subspan(1)) zs.push_back(eta(z, tables));
        c.expect_equal(eta(w, tables), brace(eta(t[0], tables), zs, OpFamily::at(0)),
                       "eta(x\\(z..)) = M(eta(x); eta(z)..) for x in D", t);
      }
      if (tables.in_b(t[0])) {
        std::vector<LinearCombination> zs;
        for (const auto& z : t.subspan(1)) zs.push_back(psi(z, tables, fam));
        c.expect_equal(psi(w, tables, fam), brace(psi(t[0], tables, fam), zs, fam),
                       "psi(x\\(z..)) = M(psi(x); psi(z)..) for x in B", t);
      }
    });
  return chk.report();
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dendriform", "tridendriform", "bialgebra", "infinitesimal",
                                              "coalgebra",  "brace",         "gv",        "order",
                                              "shuffle-sets", "words",       "freeness"};
  return names;
}

/// Default degree bound per suite.
inline int default_bound(const std::string& suite) {
  if (suite == "dendriform" || suite == "tridendriform" || suite == "words") return 6;
  if (suite == "freeness") return 4;
  return 5;
}

inline SuiteReport run_suite(const std::string& name, int bound, const OpFamily& fam = {}) {
  if (name == "dendriform") return dendriform_suite(bound, fam);
  if (name == "tridendriform") return tridendriform_suite(bound, fam);
  if (name == "bialgebra") return bialgebra_suite(bound, fam);
  if (name == "infinitesimal") return infinitesimal_suite(bound);
  if (name == "coalgebra") return coalgebra_suite(bound);
  if (name == "brace") return brace_suite(bound, fam);
  if (name == "gv") return gv_suite(bound, fam);
  if (name == "order") return order_suite(bound);
  if (name == "shuffle-sets") return shuffle_sets_suite(bound);
  if (name == "words") return words_suite(bound);
  if (name == "freeness") return freeness_suite(bound, fam);
  throw input_error("unknown suite '" + name + "'");
}

}  // namespace surj
