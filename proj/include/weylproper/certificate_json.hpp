#pragma once

// JSON encoding of certificates. Common fields for every kind:
//   {"kind", "n", "normals": [[str]], "verdict", "witness"?, "weyl"?,
//    "equations": [{"lhs", "value"}], "images_checked"}
// Scalars are exact strings ("15*sqrt2+10"), Weyl elements one-based image arrays.
// from_json(to_json(c)) == c for every certificate kind.

#include <string>
#include <vector>

#include <json.hpp>

#include "weylproper/criteria.hpp"
#include "weylproper/error.hpp"

namespace weylproper::json {

using nlohmann::json;

inline json scalar(const ExactScalar& x) { return to_string(x); }

inline json point(const CartanPoint& x) {
  json out = json::array();
  for (const auto& e : x.entries())
    out.push_back(to_string(e));
  return out;
}

inline json points(const std::vector<CartanPoint>& xs) {
  json out = json::array();
  for (const auto& x : xs)
    out.push_back(point(x));
  return out;
}

inline json weyl(const WeylElement& w) { return w.one_based(); }

inline json equations(const std::vector<Equation>& eqs) {
  json out = json::array();
  for (const auto& e : eqs)
    out.push_back({{"lhs", e.lhs}, {"value", scalar(e.value)}});
  return out;
}

inline ExactScalar parse_scalar_field(const json& j) {
  if (!j.is_string())
    throw InvalidArgument("expected an exact scalar string, got " + j.dump());
  return parse_scalar(j.get<std::string>());
}

inline CartanPoint parse_point_field(const json& j) {
  std::vector<ExactScalar> entries;
  for (const auto& e : j)
    entries.push_back(parse_scalar_field(e));
  return CartanPoint(std::move(entries));
}

inline std::vector<CartanPoint> parse_points_field(const json& j) {
  std::vector<CartanPoint> out;
  for (const auto& p : j)
    out.push_back(parse_point_field(p));
  return out;
}

inline WeylElement parse_weyl_field(const json& j) { return WeylElement::from_one_based(j.get<std::vector<long>>()); }

inline void expect_kind(const json& j, const char* kind) {
  if (j.at("kind") != kind)
    throw InvalidArgument(std::string("expected a ") + kind + " certificate");
}

// --- membership -------------------------------------------------------------

inline json to_json(const MembershipCertificate& c) {
  json j{{"kind", "membership"},
         {"n", c.n()},
         {"normals", points(c.normals)},
         {"verdict", to_string(c.verdict)},
         {"point", point(c.point)},
         {"images_checked", c.images_checked}};
  json eqs = equations(c.equations());
  if (c.weyl)
    j["weyl"] = weyl(*c.weyl);
  for (std::size_t i = 0; i < c.refutations.size(); ++i) {
    eqs[i]["weyl"] = weyl(c.refutations[i].weyl);
    eqs[i]["normal"] = c.refutations[i].normal;
  }
  j["equations"] = std::move(eqs);
  return j;
}

inline MembershipCertificate membership_from_json(const json& j) {
  expect_kind(j, "membership");
  MembershipCertificate c{parse_points_field(j.at("normals")), parse_point_field(j.at("point")),
                          MembershipVerdict::non_member, std::nullopt, {}, j.at("images_checked").get<std::size_t>()};
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict == "member") {
    c.verdict = MembershipVerdict::member;
    c.weyl = parse_weyl_field(j.at("weyl"));
  } else if (verdict != "non_member") {
    throw InvalidArgument("unknown membership verdict '" + verdict + "'");
  } else {
    for (const auto& e : j.at("equations"))
      c.refutations.push_back({parse_weyl_field(e.at("weyl")), e.at("normal").get<std::size_t>(),
                               parse_scalar_field(e.at("value"))});
  }
  return c;
}

// --- benoist ----------------------------------------------------------------

inline json to_json(const BenoistCertificate& c) {
  json j{{"kind", "benoist"},
         {"n", c.n},
         {"normals", points(c.normals)},
         {"verdict", to_string(c.verdict)},
         {"equations", equations(c.equations())},
         {"images_checked", c.images_checked()}};
  if (c.witness) {
    j["witness"] = point(c.witness->point);
    j["membership"] = to_json(*c.witness);
  }
  if (c.weyl)
    j["weyl"] = weyl(*c.weyl);
  return j;
}

inline BenoistCertificate benoist_from_json(const json& j) {
  expect_kind(j, "benoist");
  BenoistCertificate c{j.at("n").get<std::size_t>(), parse_points_field(j.at("normals")), BenoistVerdict::fails,
                       std::nullopt, std::nullopt};
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict == "holds") {
    c.verdict = BenoistVerdict::holds;
    c.witness = membership_from_json(j.at("membership"));
  } else if (verdict == "fails") {
    c.weyl = parse_weyl_field(j.at("weyl"));
  } else {
    throw InvalidArgument("unknown benoist verdict '" + verdict + "'");
  }
  return c;
}

// --- sl2 --------------------------------------------------------------------

inline json to_json(const Sl2Report& r) {
  json entries = json::array();
  json eqs = json::array();
  std::size_t checked = 0;
  for (const auto& e : r.entries) {
    entries.push_back({{"partition", to_string(e.element.source)},
                       {"a_phi", point(e.element.point)},
                       {"certificate", to_json(e.certificate)}});
    if (e.certificate.verdict == MembershipVerdict::member)
      for (auto& eq : equations(e.certificate.equations()))
        eqs.push_back(std::move(eq));
    checked += e.certificate.images_checked;
  }
  return {{"kind", "sl2"},
          {"n", r.n},
          {"normals", points(r.normals)},
          {"verdict", r.proper_sl2_exists ? "proper_sl2_exists" : "no_proper_sl2"},
          {"proper_sl2_exists", r.proper_sl2_exists},
          {"entries", std::move(entries)},
          {"equations", std::move(eqs)},
          {"images_checked", checked}};
}

inline Sl2Report sl2_from_json(const json& j) {
  expect_kind(j, "sl2");
  Sl2Report r{j.at("n").get<std::size_t>(), parse_points_field(j.at("normals")), {},
              j.at("proper_sl2_exists").get<bool>()};
  for (const auto& e : j.at("entries")) {
    const Partition p = parse_partition(e.at("partition").get<std::string>());
    r.entries.push_back({{p, parse_point_field(e.at("a_phi"))}, membership_from_json(e.at("certificate"))});
  }
  return r;
}

// --- pair -------------------------------------------------------------------

inline json to_json(const PairCertificate& c) {
  json j{{"kind", "pair"},
         {"n", c.n},
         {"normals", points(c.normals)},
         {"l_basis", points(c.l_basis)},
         {"verdict", to_string(c.verdict)},
         {"equations", equations(c.equations())},
         {"images_checked", c.images_checked}};
  if (c.weyl)
    j["weyl"] = weyl(*c.weyl);
  if (c.intersection)
    j["witness"] = point(*c.intersection);
  return j;
}

inline PairCertificate pair_from_json(const json& j) {
  expect_kind(j, "pair");
  PairCertificate c{j.at("n").get<std::size_t>(), parse_points_field(j.at("normals")),
                    parse_points_field(j.at("l_basis")), PairVerdict::proper, std::nullopt, std::nullopt,
                    j.at("images_checked").get<std::size_t>()};
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict == "not_proper") {
    c.verdict = PairVerdict::not_proper;
    c.weyl = parse_weyl_field(j.at("weyl"));
    c.intersection = parse_point_field(j.at("witness"));
  } else if (verdict == "degenerate") {
    c.verdict = PairVerdict::degenerate;
  } else if (verdict != "proper") {
    throw InvalidArgument("unknown pair verdict '" + verdict + "'");
  }
  return c;
}

} // namespace weylproper::json
