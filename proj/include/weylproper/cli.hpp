#pragma once

// Command-line front end. Exit codes: 0 success (or hits), 1 verification
// mismatch, 2 usage or parse error, 3 hunt without hits.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "weylproper/certificate_json.hpp"
#include "weylproper/criteria.hpp"
#include "weylproper/search.hpp"
#include "weylproper/sl2_orbits.hpp"
#include "weylproper/verify.hpp"

namespace weylproper::cli {

enum ExitCode : int { success = 0, mismatch = 1, usage_error = 2, no_hits = 3 };

namespace detail {

inline std::string perp(const std::vector<CartanPoint>& normals) {
  std::string out;
  for (std::size_t i = 0; i < normals.size(); ++i)
    out += (i ? "," : "") + to_tuple_string(normals[i]);
  return (normals.size() > 1 ? "{" + out + "}" : out) + "^perp";
}

inline std::string weyl_string(const WeylElement& w) {
  std::string out = "(";
  const auto images = w.one_based();
  for (std::size_t i = 0; i < images.size(); ++i)
    out += (i ? "," : "") + std::to_string(images[i]);
  return out + ")";
}

inline CartanPoint parse_sized_point(const std::string& text, std::size_t n, const char* what) {
  CartanPoint x = parse_point(text);
  if (x.n() != n)
    throw InvalidArgument(std::string(what) + " '" + text + "' has " + std::to_string(x.n()) +
                          " coordinates, expected " + std::to_string(n));
  return x;
}

inline void print_equations(std::ostream& out, const std::vector<Equation>& eqs, const char* indent) {
  for (const auto& e : eqs)
    out << indent << e.lhs << " = " << to_string(e.value) << '\n';
}

inline void print(std::ostream& out, const MembershipCertificate& c) {
  out << "point " << to_tuple_string(c.point) << " against a_h = " << perp(c.normals) << ", n = " << c.n() << '\n';
  out << "verdict: " << to_string(c.verdict) << " (" << c.images_checked << " distinct normal images checked)\n";
  if (c.weyl)
    out << "weyl: " << weyl_string(*c.weyl) << '\n';
  print_equations(out, c.equations(), "  ");
}

inline void print(std::ostream& out, const BenoistCertificate& c) {
  out << "benoist: " << to_string(c.verdict)
      << (c.verdict == BenoistVerdict::holds ? " (b+ not contained in W.a_h)\n" : " (b+ contained in W.a_h)\n");
  if (c.witness) {
    out << "  witness " << to_tuple_string(c.witness->point) << " in b+: " << to_string(c.witness->verdict) << " on "
        << c.witness->images_checked << " distinct normal images\n";
  } else {
    out << "  weyl " << weyl_string(*c.weyl) << " makes every normal palindromic:\n";
    print_equations(out, c.equations(), "    ");
  }
}

inline void print(std::ostream& out, const Sl2Report& r) {
  out << "sl2 obstruction: " << (r.proper_sl2_exists ? "a proper SL(2,R)-action exists" : "no proper SL(2,R)-action")
      << '\n';
  std::size_t width = 0, point_width = 0;
  for (const auto& e : r.entries) {
    width = std::max(width, to_string(e.element.source).size());
    point_width = std::max(point_width, to_tuple_string(e.element.point).size());
  }
  for (const auto& e : r.entries) {
    out << "  " << std::left << std::setw(static_cast<int>(width) + 2) << to_string(e.element.source)
        << std::setw(static_cast<int>(point_width) + 2) << to_tuple_string(e.element.point)
        << to_string(e.certificate.verdict);
    if (e.certificate.weyl)
      out << "  " << e.certificate.equations().front().lhs << " = 0";
    out << '\n';
  }
}

inline void print(std::ostream& out, const PairCertificate& c) {
  out << "pair: " << to_string(c.verdict) << " (" << c.images_checked << " distinct images of a_l checked)\n";
  if (c.weyl) {
    out << "  weyl " << weyl_string(*c.weyl) << ", intersection " << to_tuple_string(*c.intersection) << '\n';
    print_equations(out, c.equations(), "    ");
  }
}

inline std::size_t default_jobs() {
  if (const char* env = std::getenv("WEYLPROPER_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1)
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// --- commands ---------------------------------------------------------------

inline int verify_paper(const std::string& normal_text, bool as_json, std::ostream& out, std::ostream& err) {
  const VerificationReport report = verify_counterexample(parse_sized_point(normal_text, 5, "normal"));
  if (as_json) {
    nlohmann::json clauses = nlohmann::json::array();
    for (const auto& c : report.clauses)
      clauses.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    nlohmann::json multiples = nlohmann::json::array();
    for (const auto& m : report.multiples)
      multiples.push_back({{"partition", to_string(m.partition)}, {"of", to_string(m.of)}, {"factor", m.factor.get_str()}});
    const nlohmann::json doc{{"kind", "verify-paper"},
                             {"n", 5},
                             {"normals", json::points({report.normal})},
                             {"dimension", report.dimension},
                             {"ok", report.ok()},
                             {"clauses", clauses},
                             {"orthogonality", json::equations(report.orthogonality)},
                             {"scalar_multiples", multiples},
                             {"benoist", json::to_json(report.benoist)},
                             {"sl2", json::to_json(report.sl2)}};
    out << doc.dump(2) << '\n';
  } else {
    out << "a_h = " << perp({report.normal}) << " in sl(5,R)\n";
    for (const auto& c : report.clauses) {
      out << (c.ok ? "[ok]   " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
      if (c.name == "orthogonality")
        print_equations(out, report.orthogonality, "         ");
    }
    out << '\n';
    print(out, report.benoist);
    print(out, report.sl2);
    for (const auto& m : report.multiples)
      out << "  " << to_string(m.partition) << ": A_phi is a scalar multiple (" << m.factor.get_str() << "x) of "
          << to_string(m.of) << "'s\n";
    out << '\n';
    if (report.ok())
      out << "b+ is not contained in W.a_h, and every A_phi lies in W.a_h: SL(5,R)/H admits non virtually "
             "abelian discontinuous groups but no proper SL(2,R)-action.\n";
  }
  if (const Clause* failed = report.first_failure()) {
    err << "verify-paper: clause '" << failed->name << "' failed: " << failed->detail << '\n';
    return mismatch;
  }
  return success;
}

inline int table(std::size_t n, bool as_json, std::ostream& out) {
  const auto rows = hyperbolic_set(n);
  if (as_json) {
    nlohmann::json doc{{"n", n}, {"rows", nlohmann::json::array()}};
    for (const auto& r : rows)
      doc["rows"].push_back({{"partition", to_string(r.source)}, {"a_phi", json::point(r.point)}});
    out << doc.dump(2) << '\n';
    return success;
  }
  const std::string header = "Partition of " + std::to_string(n);
  std::size_t width = header.size();
  for (const auto& r : rows)
    width = std::max(width, to_string(r.source).size());
  width += 2;
  out << std::left << std::setw(static_cast<int>(width)) << header << "A_phi\n";
  for (const auto& r : rows)
    out << std::left << std::setw(static_cast<int>(width)) << to_string(r.source) << "diag(" << to_string(r.point)
        << ")\n";
  return success;
}

struct CheckOptions {
  std::size_t n = 0;
  std::vector<std::string> normals;
  std::optional<std::string> point;
  std::vector<std::string> span;
  std::string witness = "symbolic";
  bool json = false;
};

inline int check(const CheckOptions& o, std::ostream& out) {
  std::vector<CartanPoint> normals;
  for (const auto& text : o.normals)
    normals.push_back(parse_sized_point(text, o.n, "normal"));
  const SplitSubalgebra h(normals);
  if (o.point) {
    const auto cert = weyl_membership(parse_sized_point(*o.point, o.n, "point"), h);
    if (o.json)
      out << json::to_json(cert).dump(2) << '\n';
    else
      print(out, cert);
    return success;
  }
  if (!o.span.empty()) {
    std::vector<CartanPoint> span;
    for (const auto& text : o.span)
      span.push_back(parse_sized_point(text, o.n, "span vector"));
    const auto cert = kobayashi_pair_check(span, h);
    if (o.json)
      out << json::to_json(cert).dump(2) << '\n';
    else
      print(out, cert);
    return success;
  }
  const auto strategy = o.witness == "rational" ? WitnessStrategy::rational : WitnessStrategy::symbolic;
  const auto benoist = benoist_check(h, strategy);
  const auto sl2 = sl2_obstruction(h);
  if (o.json) {
    out << nlohmann::json{{"benoist", json::to_json(benoist)}, {"sl2", json::to_json(sl2)}}.dump(2) << '\n';
  } else {
    out << "a_h = " << perp(h.normals()) << " in sl(" << h.n() << ",R), dim a_h = " << h.dimension() << '\n';
    print(out, benoist);
    print(out, sl2);
  }
  return success;
}

inline nlohmann::json hit_json(const SearchHit& hit) {
  return {{"normals", json::points(hit.normals)}, {"benoist", json::to_json(hit.benoist)}, {"sl2", json::to_json(hit.sl2)}};
}

inline int hunt(const SearchSpec& spec, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const SearchResult result = weylproper::hunt(spec);
  for (const auto& hit : result.hits)
    out << hit_json(hit).dump() << '\n';
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  const auto& s = result.stats;
  out << nlohmann::json{{"summary",
                         {{"candidates", s.candidates},
                          {"palindrome_rejects", s.palindrome_rejects},
                          {"sl2_rejects", s.sl2_rejects},
                          {"hits", s.hits},
                          {"truncated", s.truncated},
                          {"elapsed_ms", elapsed}}}}
             .dump()
      << '\n';
  return result.hits.empty() ? no_hits : success;
}

} // namespace detail

/// Runs one command; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact properness criteria for SL(n,R)/H with H split abelian", "weylproper"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string verify_normal = "6,6,1,-4,-9";
  auto* verify = app.add_subcommand("verify-paper", "Verify the SL(5,R) counterexample end to end");
  verify->add_option("--normal", verify_normal, "normal vector of a_h (default 6,6,1,-4,-9)");
  verify->add_flag("--json", as_json, "emit one JSON document");

  std::size_t table_n = 0;
  auto* table = app.add_subcommand("table", "List A_phi for every partition of n");
  table->add_option("--n", table_n, "matrix size")->required()->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  table->add_flag("--json", as_json, "emit one JSON document");

  detail::CheckOptions check_opts;
  auto* check = app.add_subcommand("check", "Membership, Benoist and SL(2,R) checks for one subalgebra");
  check->add_option("--n", check_opts.n, "matrix size")->required()->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  check->add_option("--normal", check_opts.normals, "normal vector of a_h (repeatable)")->required();
  auto* point_opt = check->add_option("--point", check_opts.point, "decide membership of this point in W.a_h");
  check->add_option("--span", check_opts.span, "spanning vector of a_l for the pair criterion (repeatable)")
      ->excludes(point_opt);
  check->add_option("--witness", check_opts.witness, "Benoist witness strategy")
      ->check(CLI::IsMember({"symbolic", "rational"}));
  check->add_flag("--json", check_opts.json, "emit one JSON document");

  SearchSpec spec;
  spec.jobs = detail::default_jobs();
  std::size_t limit = 0;
  auto* hunt = app.add_subcommand("hunt", "Search integer normals for the counterexample phenomenon (JSON lines)");
  hunt->add_option("--n", spec.n, "matrix size")->required()->check(CLI::Range(std::size_t{2}, std::size_t{12}));
  hunt->add_option("--bound", spec.bound, "max absolute entry of normals")->required()->check(CLI::PositiveNumber);
  hunt->add_option("--codim", spec.codim, "number of normals")->check(CLI::PositiveNumber);
  hunt->add_option("--jobs", spec.jobs, "worker threads (default $WEYLPROPER_JOBS)")->check(CLI::PositiveNumber);
  auto* limit_opt = hunt->add_option("--limit", limit, "stop after this many hits")->check(CLI::PositiveNumber);
  hunt->add_flag("--json", as_json, "accepted for uniformity; output is always JSON lines");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage_error;
  }

  try {
    if (*verify)
      return detail::verify_paper(verify_normal, as_json, out, err);
    if (*table)
      return detail::table(table_n, as_json, out);
    if (*check)
      return detail::check(check_opts, out);
    if (limit_opt->count() > 0)
      spec.limit = limit;
    spec.validate();
    return detail::hunt(spec, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
}

} // namespace weylproper::cli
