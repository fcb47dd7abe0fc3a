#pragma once

// Command-line front end. `run` takes the arguments after the program name
// so tests can drive it without a process boundary.

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "surj/coalgebra.hpp"
#include "surj/freeness.hpp"
#include "surj/io.hpp"
#include "surj/products.hpp"
#include "surj/rank.hpp"
#include "surj/suites.hpp"

namespace surj::cli {

enum Exit : int { ok = 0, check_failed = 1, usage = 2 };

inline const std::map<std::string, Product>& kinds() {
  static const std::map<std::string, Product> table{
      {"concat", Product::concat},       {"shuffle", Product::shuffle},   {"left", Product::left},
      {"right", Product::right},         {"middle", Product::middle},     {"weak-right", Product::weak_right},
      {"dot", Product::dot},             {"backslash", Product::backslash}, {"associative", Product::associative}};
  return table;
}

namespace detail {

/// Prints a combination over Z[q], or its value at a rational q.
inline void emit(const LinearCombination& a, const std::optional<Rational>& q, bool json, std::ostream& out) {
  if (!q) {
    out << (json ? to_json(a).dump() : a.to_string()) << '\n';
    return;
  }
  const auto v = a.evaluate(*q);
  out << (json ? to_json(v).dump() : to_string(v)) << '\n';
}

inline OpFamily family_for_check(const std::optional<Rational>& q) {
  if (!q) return {};
  if (denominator(*q) != 1) throw input_error("check runs over Z[q]; --q must be an integer or 'q'");
  return OpFamily{QPolynomial(numerator(*q)), nullptr};
}

inline std::string report_text(const SuiteReport& r) {
  std::ostringstream s;
  s << r.suite << ": " << (r.pass() ? "pass" : "FAIL") << " (" << r.checked << " checks)";
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    s << "\n  relation: " << c.relation << "\n  arguments:";
    if (c.arguments.empty()) s << " -";
    for (const auto& a : c.arguments) s << ' ' << to_string(a);
    s << "\n  total degree: " << c.total_degree;
    if (!c.detail.empty()) s << "\n  detail: " << c.detail;
  }
  return s.str();
}

inline Json words_json(const std::vector<Surjection>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(word_json(w));
  return out;
}

inline std::string words_text(const std::vector<Surjection>& ws) {
  std::string out;
  for (const auto& w : ws) out += (out.empty() ? "" : " ") + to_string(w);
  return out.empty() ? "-" : out;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact algebra of surjective maps (packed words)", "surj"};
  app.require_subcommand(1);

  std::string q_text = "q";
  std::string format = "text";
  int max_n = 4;
  std::optional<int> max_total;
  std::string kind;
  std::vector<std::string> suites;
  std::vector<std::string> words;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_q = [&](CLI::App* sub) { sub->add_option("--q", q_text, "Rational value of q, or 'q' for symbolic"); };

  auto* op = app.add_subcommand("op", "Multiply two words");
  std::vector<std::string> kind_names;
  for (const auto& [name, _] : kinds()) kind_names.push_back(name);
  op->add_option("--kind", kind, "Product")->required()->check(CLI::IsMember(kind_names));
  add_q(op);
  add_format(op);
  op->add_option("words", words, "Two words, e.g. 2,1,1 1,2")->required()->expected(2);

  auto* cop = app.add_subcommand("coproduct", "Coproduct over value cuts");
  add_format(cop);
  cop->add_option("word", words, "A word")->required()->expected(1);

  auto* prim = app.add_subcommand("primitive", "Eulerian projector E");
  add_format(prim);
  prim->add_option("word", words, "A word")->required()->expected(1);

  auto* eta_cmd = app.add_subcommand("eta", "Brace-basis primitive of an irreducible word");
  add_format(eta_cmd);
  eta_cmd->add_option("word", words, "An irreducible word")->required()->expected(1);

  auto* psi_cmd = app.add_subcommand("psi", "GV-basis primitive of an irreducible word");
  add_q(psi_cmd);
  add_format(psi_cmd);
  psi_cmd->add_option("word", words, "An irreducible word")->required()->expected(1);

  auto* basis_cmd = app.add_subcommand("basis", "List the generator sets D, C, B");
  basis_cmd->add_option("--max-n", max_n, "Largest degree")->check(CLI::Range(1, 7));
  add_format(basis_cmd);

  auto* dims_cmd = app.add_subcommand("dims", "Dimension table");
  dims_cmd->add_option("--max-n", max_n, "Largest degree")->check(CLI::Range(1, 6));
  add_format(dims_cmd);

  auto* check_cmd = app.add_subcommand("check", "Run property suites");
  check_cmd->add_option("--suite", suites, "Suite name (repeatable; default all)")
      ->check(CLI::IsMember(suite_names()));
  check_cmd->add_option("--max-total", max_total, "Total degree bound")->check(CLI::Range(1, 8));
  check_cmd->add_option("--max-n", max_n, "Degree bound for the freeness suite")->check(CLI::Range(1, 6));
  add_q(check_cmd);
  add_format(check_cmd);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Exit::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return Exit::usage;
  }

  const bool json = format == "json";
  try {
    const std::optional<Rational> q = parse_q(q_text);
    std::vector<Surjection> xs;
    for (const auto& w : words) xs.push_back(parse_word(w));

    if (*op) {
      const Product p = kinds().at(kind);
      const auto value = multiply(p, xs[0], xs[1], OpFamily{});
      detail::emit(value, q, json, out);
      return Exit::ok;
    }
    if (*cop) {
      const auto t = coproduct(xs[0]);
      out << (json ? to_json(t).dump() : t.to_string()) << '\n';
      return Exit::ok;
    }
    if (*prim) {
      detail::emit(eulerian_projector(xs[0]), std::nullopt, json, out);
      return Exit::ok;
    }
    if (*eta_cmd || *psi_cmd) {
      const BasisTables tables(static_cast<int>(xs[0].size()));
      tables.require(xs[0]);
      if (*eta_cmd) {
        detail::emit(eta(xs[0], tables), std::nullopt, json, out);
      } else {
        detail::emit(psi(xs[0], tables), q, json, out);
      }
      return Exit::ok;
    }
    if (*basis_cmd) {
      const BasisTables tables(max_n);
      Json rows = Json::array();
      for (int n = 1; n <= max_n; ++n) {
        const auto& lv = tables.level(n);
        if (json) {
          rows.push_back({{"n", n},
                          {"D", detail::words_json(lv.d)},
                          {"C", detail::words_json(lv.c)},
                          {"B", detail::words_json(lv.b)}});
        } else {
          out << "n=" << n << "\n  D: " << detail::words_text(lv.d) << "\n  C: " << detail::words_text(lv.c)
              << "\n  B: " << detail::words_text(lv.b) << '\n';
        }
      }
      if (json) out << rows.dump() << '\n';
      return Exit::ok;
    }
    if (*dims_cmd) {
      const BasisTables tables(max_n);
      Json rows = Json::array();
      if (!json) out << std::setw(2) << "n" << std::setw(7) << "ST" << std::setw(7) << "Irr" << std::setw(7) << "Indec"
                     << std::setw(7) << "D" << std::setw(7) << "C" << std::setw(7) << "B" << std::setw(10) << "primRank"
                     << '\n';
      for (int n = 1; n <= max_n; ++n) {
        const auto& lv = tables.level(n);
        std::vector<LinearCombination> images;
        for (const auto& x : lv.st) images.push_back(eulerian_projector(x));
        const std::size_t prim_rank = rank_at(images, 0);
        if (json) {
          rows.push_back({{"n", n},
                          {"ST", lv.st.size()},
                          {"Irr", lv.irr.size()},
                          {"Indec", lv.indec.size()},
                          {"D", lv.d.size()},
                          {"C", lv.c.size()},
                          {"B", lv.b.size()},
                          {"primRank", prim_rank}});
        } else {
          out << std::setw(2) << n << std::setw(7) << lv.st.size() << std::setw(7) << lv.irr.size() << std::setw(7)
              << lv.indec.size() << std::setw(7) << lv.d.size() << std::setw(7) << lv.c.size() << std::setw(7)
              << lv.b.size() << std::setw(10) << prim_rank << '\n';
        }
      }
      if (json) out << rows.dump() << '\n';
      return Exit::ok;
    }
    if (*check_cmd) {
      const OpFamily fam = detail::family_for_check(q);
      if (suites.empty()) suites = suite_names();
      bool all = true;
      Json reports = Json::array();
      for (const auto& name : suites) {
        const int bound = name == "freeness" ? max_n : max_total.value_or(default_bound(name));
        const SuiteReport r = run_suite(name, bound, fam);
        all = all && r.pass();
        if (json) {
          Json j = to_json(r);
          j["bound"] = bound;
          reports.push_back(std::move(j));
        } else {
          out << detail::report_text(r) << '\n';
        }
      }
      if (json) out << Json{{"pass", all}, {"suites", std::move(reports)}}.dump() << '\n';
      return all ? Exit::ok : Exit::check_failed;
    }
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
    return Exit::usage;
  }
  return Exit::usage;
}

}  // namespace surj::cli
