#pragma once

// Word literals, q literals, and JSON encodings of combinations and reports.

#include <charconv>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "surj/axioms.hpp"
#include "surj/error.hpp"
#include "surj/freeness.hpp"
#include "surj/linear_combination.hpp"
#include "surj/words.hpp"

namespace surj {

using Json = nlohmann::ordered_json;

/// Splits "3,4,2,5,1,1,3,5" into positive letters without checking packedness.
inline std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  if (text.empty()) throw input_error("empty word literal");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view tok = text.substr(pos, comma - pos);
    Letter v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size() || v < 1)
      throw input_error("bad letter '" + std::string(tok) + "' in word literal '" + std::string(text) + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

/// A packed word literal; anything else is an input error.
inline Surjection parse_word(std::string_view text) { return Surjection(parse_letters(text)); }

/// "q" for the indeterminate, otherwise an integer or a fraction "a/b".
inline std::optional<Rational> parse_q(const std::string& text) {
  if (text == "q") return std::nullopt;
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    const Integer den(text.substr(slash + 1));
    if (den == 0) throw input_error("zero denominator in q literal '" + text + "'");
    return Rational(Integer(text.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw input_error("q must be a rational literal or 'q', got '" + text + "'");
  }
}

inline Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

inline Json rational_json(const Rational& v) {
  if (denominator(v) == 1) return integer_json(numerator(v));
  return v.str();
}

inline Json word_json(const Surjection& x) { return Json(x.word()); }

inline Json to_json(const QPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(integer_json(c));
  return out;
}

/// {"degree": n, "terms": [{"coeff": [c0, c1, ...], "word": [...]}]}
inline Json to_json(const LinearCombination& a) {
  Json terms = Json::array();
  for (const auto& [x, c] : a) terms.push_back({{"coeff", to_json(c)}, {"word", word_json(x)}});
  const auto d = a.degree();
  return {{"degree", d ? Json(*d) : Json(nullptr)}, {"terms", std::move(terms)}};
}

/// Same layout with each coefficient already evaluated at a rational q.
inline Json to_json(const std::map<Surjection, Rational>& a) {
  Json terms = Json::array();
  std::optional<std::size_t> degree;
  bool homogeneous = true;
  for (const auto& [x, c] : a) {
    if (degree && *degree != x.size()) homogeneous = false;
    degree = x.size();
    terms.push_back({{"coeff", Json::array({rational_json(c)})}, {"word", word_json(x)}});
  }
  return {{"degree", degree && homogeneous ? Json(*degree) : Json(nullptr)}, {"terms", std::move(terms)}};
}

inline Json to_json(const TensorCombination& t) {
  Json terms = Json::array();
  for (const auto& [key, c] : t) {
    Json words = Json::array();
    for (const auto& x : key) words.push_back(word_json(x));
    terms.push_back({{"coeff", to_json(c)}, {"words", std::move(words)}});
  }
  return {{"terms", std::move(terms)}};
}

inline std::string to_string(const std::map<Surjection, Rational>& a) {
  if (a.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [x, c] : a) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (!first) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    if (mag != 1) out += mag.str();
    out += x.empty() ? std::string("1") : to_string(x);
    first = false;
  }
  return out;
}

inline Json to_json(const SuiteReport& r) {
  Json out{{"suite", r.suite}, {"pass", r.pass()}, {"checked", r.checked}};
  if (r.counterexample) {
    Json args = Json::array();
    for (const auto& a : r.counterexample->arguments) args.push_back(word_json(a));
    out["counterexample"] = {{"relation", r.counterexample->relation},
                             {"arguments", std::move(args)},
                             {"total_degree", r.counterexample->total_degree},
                             {"detail", r.counterexample->detail}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

/// {"n", "counts": {...}, "ranks": {"E", "eta", "psi": {...}}, "normal_forms": {...}, "pass"}
inline Json to_json(const FreenessReport& r) {
  Json counts = Json::object();
  for (const char* key : {"ST", "Irr", "Indec", "D", "C", "B"}) counts[key] = r.counts.at(key);
  Json psi = Json::object();
  for (const auto& [label, k] : r.rank_psi) psi[label] = k;
  return {{"n", r.n},
          {"counts", std::move(counts)},
          {"ranks", {{"E", r.rank_e}, {"eta", r.rank_eta}, {"psi", std::move(psi)}}},
          {"normal_forms", {{"brace", r.brace_forms}, {"gv", r.gv_forms}}},
          {"pass", r.pass}};
}

}  // namespace surj
