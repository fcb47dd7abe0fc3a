#pragma once

// Generator sets D, C, B inside Irr, the maps eta and psi^q into the
// primitives, normal-form trees for free brace and GV_q algebras, and the
// rank checks that witness freeness in low degrees.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "surj/coalgebra.hpp"
#include "surj/error.hpp"
#include "surj/linear_combination.hpp"
#include "surj/products.hpp"
#include "surj/rank.hpp"
#include "surj/words.hpp"

namespace surj {

/// Per-degree sets, each sorted in the canonical order.
struct BasisLevel {
  std::vector<Surjection> st, irr, indec, d, c, b;
};

class BasisTables {
 public:
  explicit BasisTables(int max_n) {
    if (max_n < 1) throw input_error("basis tables need max_n >= 1");
    levels_.resize(static_cast<std::size_t>(max_n) + 1);
    for (int n = 1; n <= max_n; ++n) build(n);
  }

  int max_n() const noexcept { return static_cast<int>(levels_.size()) - 1; }
  const BasisLevel& level(int n) const {
    if (n < 1 || n > max_n()) throw input_error("degree " + std::to_string(n) + " outside the basis tables");
    return levels_[static_cast<std::size_t>(n)];
  }

  bool in_d(const Surjection& x) const { return d_.contains(x); }
  bool in_c(const Surjection& x) const { return c_.contains(x); }
  bool in_b(const Surjection& x) const { return b_.contains(x); }

  /// Covers words of length |x|.
  void require(const Surjection& x) const {
    if (x.empty() || static_cast<int>(x.size()) > max_n())
      throw input_error("word " + to_string(x) + " outside the basis tables");
  }

 private:
  void build(int n) {
    BasisLevel& lv = levels_[static_cast<std::size_t>(n)];
    lv.st = all_surjections(n);
    for (const auto& x : lv.st) {
      if (is_indecomposable(x)) lv.indec.push_back(x);
      if (!is_irreducible(x)) continue;
      lv.irr.push_back(x);
      bool d_split = false, c_split = false;
      for (std::size_t k = 1; k < x.size(); ++k) {
        if (!backslash_splits_at(x, k)) continue;
        const Surjection head = restrict_range(x, 1, k);
        d_split = d_split || d_.contains(head);
        c_split = c_split || b_.contains(head);
      }
      const bool in_d = (n == 1) || (n == 2 ? x == Surjection{1, 1} : !d_split);
      const bool in_c = n > 1 && (c_split || is_dot_decomposable(x));
      if (in_d) lv.d.push_back(x);
      (in_c ? lv.c : lv.b).push_back(x);
    }
    d_.insert(lv.d.begin(), lv.d.end());
    c_.insert(lv.c.begin(), lv.c.end());
    b_.insert(lv.b.begin(), lv.b.end());
  }

  std::vector<BasisLevel> levels_;
  std::set<Surjection> d_, c_, b_;
};

/// x = head \ (tail_1 x ... x tail_p) with the tails irreducible.
struct BackslashDecomposition {
  Surjection head;
  std::vector<Surjection> tail;
};

/// The split with the shortest head satisfying `pred`; unique for pred in {D, B}.
template <typename Pred>
std::optional<BackslashDecomposition> backslash_decomposition(const Surjection& x, Pred&& pred) {
  for (std::size_t k = 1; k < x.size(); ++k) {
    if (!backslash_splits_at(x, k)) continue;
    Surjection head = restrict_range(x, 1, k);
    if (pred(head)) return BackslashDecomposition{std::move(head), irreducible_factorization(restrict_range(x, k + 1, x.size()))};
  }
  return std::nullopt;
}

/// The brace homomorphism K[Irr] -> Prim(ST) with eta = E on D, using the
/// dendriform braces at q = 0.
inline LinearCombination eta(const Surjection& x, const BasisTables& tables) {
  tables.require(x);
  if (!is_irreducible(x)) throw input_error("eta needs an irreducible word, got " + to_string(x));
  if (tables.in_d(x)) return eulerian_projector(x);
  auto split = backslash_decomposition(x, [&](const Surjection& h) { return tables.in_d(h); });
  if (!split) throw std::logic_error("irreducible word with no D-head: " + to_string(x));
  std::vector<LinearCombination> args;
  for (const auto& z : split->tail) args.push_back(eta(z, tables));
  return brace(eulerian_projector(split->head), args, OpFamily::at(0));
}

/// The GV_q homomorphism K[Irr] -> Prim(ST_qT) with psi = E on B.
inline LinearCombination psi(const Surjection& x, const BasisTables& tables, const OpFamily& family = {}) {
  tables.require(x);
  if (!is_irreducible(x)) throw input_error("psi needs an irreducible word, got " + to_string(x));
  if (tables.in_b(x)) return eulerian_projector(x);
  if (is_indecomposable(x)) {
    auto split = backslash_decomposition(x, [&](const Surjection& h) { return tables.in_b(h); });
    if (!split) throw std::logic_error("indecomposable word in C with no B-head: " + to_string(x));
    std::vector<LinearCombination> args;
    for (const auto& z : split->tail) args.push_back(psi(z, tables, family));
    return brace(eulerian_projector(split->head), args, family);
  }
  const auto factors = dot_factorization(x);
  LinearCombination acc = psi(factors.front(), tables, family);
  for (std::size_t i = 1; i < factors.size(); ++i)
    acc = multiply(Product::middle, acc, psi(factors[i], tables, family), family);
  return acc;
}

// ------------------------------------------------------------- normal forms

/// A brace node M(generator; children) or a product node children_1 . ... . children_k.
struct NormalForm {
  enum class Kind { brace, product };

  Kind kind = Kind::brace;
  Surjection generator;
  std::vector<NormalForm> children;

  static NormalForm leaf(Surjection x) { return {Kind::brace, std::move(x), {}}; }

  std::size_t degree() const {
    std::size_t d = generator.size();
    for (const auto& c : children) d += c.degree();
    return d;
  }

  std::string to_string() const {
    std::string out;
    if (kind == Kind::product) {
      for (std::size_t i = 0; i < children.size(); ++i) out += (i ? "." : "") + children[i].to_string();
      return "[" + out + "]";
    }
    out = surj::to_string(generator);
    if (children.empty()) return out;
    out = "M(" + out + ";";
    for (std::size_t i = 0; i < children.size(); ++i) out += (i ? "," : "") + children[i].to_string();
    return out + ")";
  }
};

namespace detail {

inline void validate(const NormalForm& t) {
  if (t.kind == NormalForm::Kind::brace) {
    if (t.generator.empty()) throw input_error("brace node without a generator");
  } else {
    if (!t.generator.empty()) throw input_error("product node carries a generator");
    if (t.children.size() < 2) throw input_error("product node needs at least two factors");
    for (const auto& c : t.children)
      if (c.kind != NormalForm::Kind::brace) throw input_error("product factors must be brace nodes");
  }
}

// All ordered lists of forms (from `pool(d)`) with degrees summing to total.
template <typename Pool>
std::vector<std::vector<NormalForm>> sequences(int total, Pool&& pool) {
  std::vector<std::vector<NormalForm>> out;
  if (total == 0) {
    out.emplace_back();
    return out;
  }
  for (int first = 1; first <= total; ++first)
    for (const auto& head : pool(first))
      for (auto& rest : sequences(total - first, pool)) {
        rest.insert(rest.begin(), head);
        out.push_back(std::move(rest));
      }
  return out;
}

}  // namespace detail

/// The free-brace basis M(D) in degree n.
inline std::vector<NormalForm> brace_normal_forms(int n, const BasisTables& tables) {
  std::map<int, std::vector<NormalForm>> memo;
  auto forms = [&](auto&& self, int d) -> const std::vector<NormalForm>& {
    if (auto it = memo.find(d); it != memo.end()) return it->second;
    std::vector<NormalForm> out;
    for (int m = 1; m <= d; ++m)
      for (const auto& x : tables.level(m).d)
        for (auto& args : detail::sequences(d - m, [&](int k) -> const std::vector<NormalForm>& { return self(self, k); }))
          out.push_back({NormalForm::Kind::brace, x, std::move(args)});
    return memo.emplace(d, std::move(out)).first->second;
  };
  return forms(forms, n);
}

/// The free GV basis G(B) in degree n: brace nodes over B with GV arguments,
/// and products of two or more brace nodes.
inline std::vector<NormalForm> gv_normal_forms(int n, const BasisTables& tables) {
  std::map<int, std::vector<NormalForm>> braces, all;
  std::function<const std::vector<NormalForm>&(int)> gv;
  std::function<const std::vector<NormalForm>&(int)> br = [&](int d) -> const std::vector<NormalForm>& {
    if (auto it = braces.find(d); it != braces.end()) return it->second;
    std::vector<NormalForm> out;
    for (int m = 1; m <= d; ++m)
      for (const auto& x : tables.level(m).b)
        for (auto& args : detail::sequences(d - m, gv)) out.push_back({NormalForm::Kind::brace, x, std::move(args)});
    return braces.emplace(d, std::move(out)).first->second;
  };
  gv = [&](int d) -> const std::vector<NormalForm>& {
    if (auto it = all.find(d); it != all.end()) return it->second;
    std::vector<NormalForm> out = br(d);
    for (auto& factors : detail::sequences(d, br))
      if (factors.size() >= 2) out.push_back({NormalForm::Kind::product, Surjection{}, std::move(factors)});
    return all.emplace(d, std::move(out)).first->second;
  };
  return gv(n);
}

/// Value in K[Irr]: brace nodes by backslash over the concatenated arguments,
/// product nodes by the dot product.
inline Surjection evaluate_in_irr(const NormalForm& t) {
  detail::validate(t);
  if (t.kind == NormalForm::Kind::product) {
    Surjection acc = evaluate_in_irr(t.children.front());
    for (std::size_t i = 1; i < t.children.size(); ++i) acc = dot(acc, evaluate_in_irr(t.children[i]));
    return acc;
  }
  if (t.children.empty()) return t.generator;
  std::vector<Surjection> args;
  for (const auto& c : t.children) args.push_back(evaluate_in_irr(c));
  return backslash(t.generator, concat(std::span<const Surjection>(args)));
}

/// Value in Prim(ST): generators map to E(x), nodes to the ST braces and ._q.
inline LinearCombination evaluate_in_st(const NormalForm& t, const OpFamily& family = {}) {
  detail::validate(t);
  if (t.kind == NormalForm::Kind::product) {
    LinearCombination acc = evaluate_in_st(t.children.front(), family);
    for (std::size_t i = 1; i < t.children.size(); ++i)
      acc = multiply(Product::middle, acc, evaluate_in_st(t.children[i], family), family);
    return acc;
  }
  std::vector<LinearCombination> args;
  for (const auto& c : t.children) args.push_back(evaluate_in_st(c, family));
  return brace(eulerian_projector(t.generator), args, family);
}

// ------------------------------------------------------------------ report

struct FreenessReport {
  int n = 0;
  std::map<std::string, std::size_t> counts;  ///< ST, Irr, Indec, D, C, B
  std::size_t rank_e = 0, rank_eta = 0;
  std::vector<std::pair<std::string, std::size_t>> rank_psi;  ///< q label -> rank
  std::size_t brace_forms = 0, gv_forms = 0;
  bool pass = false;
};

inline std::string q_label(const std::optional<Rational>& q) { return q ? q->str() : "symbolic"; }

/// Ranks of E(ST_n), eta(Irr_n) and psi^q(Irr_n), and the normal-form counts,
/// all compared with |Irr_n|. A nullopt entry in `qs` asks for the rank over Q(q).
inline FreenessReport freeness_report(int n, const std::vector<std::optional<Rational>>& qs,
                                      const BasisTables& tables) {
  const BasisLevel& lv = tables.level(n);
  FreenessReport r;
  r.n = n;
  r.counts = {{"ST", lv.st.size()}, {"Irr", lv.irr.size()}, {"Indec", lv.indec.size()},
              {"D", lv.d.size()},   {"C", lv.c.size()},     {"B", lv.b.size()}};
  const std::size_t target = lv.irr.size();

  std::vector<LinearCombination> vs;
  for (const auto& x : lv.st) vs.push_back(eulerian_projector(x));
  r.rank_e = rank_at(vs, 0);
  vs.clear();
  for (const auto& x : lv.irr) vs.push_back(eta(x, tables));
  r.rank_eta = rank_at(vs, 0);

  std::optional<std::vector<LinearCombination>> symbolic;
  auto symbolic_images = [&]() -> const std::vector<LinearCombination>& {
    if (!symbolic) {
      symbolic.emplace();
      for (const auto& x : lv.irr) symbolic->push_back(psi(x, tables));
    }
    return *symbolic;
  };
  bool ok = r.rank_e == target && r.rank_eta == target;
  for (const auto& q : qs) {
    std::size_t k = 0;
    if (!q) {
      k = rank_symbolic(symbolic_images());
    } else if (denominator(*q) == 1) {
      const Integer v = numerator(*q);
      vs.clear();
      for (const auto& x : lv.irr) vs.push_back(psi(x, tables, OpFamily{QPolynomial(v), nullptr}));
      k = rank_at(vs, 0);
    } else {
      k = rank_at(symbolic_images(), *q);
    }
    r.rank_psi.emplace_back(q_label(q), k);
    ok = ok && k == target;
  }
  r.brace_forms = brace_normal_forms(n, tables).size();
  r.gv_forms = gv_normal_forms(n, tables).size();
  r.pass = ok && r.brace_forms == target && r.gv_forms == target;
  return r;
}

}  // namespace surj
