#pragma once

// End-to-end check of the SL(5,R) counterexample a_h = (6,6,1,-4,-9)^perp:
// a_h is 3-dimensional, Benoist's condition holds (witness diag(sqrt2,1,0,-1,-sqrt2)),
// and every A_phi lies in W.a_h, so no SL(2,R) acts properly on SL(5,R)/H.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylproper/criteria.hpp"

namespace weylproper {

inline CartanPoint counterexample_normal() { return CartanPoint::from_integers({6, 6, 1, -4, -9}); }

struct Clause {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// A_phi = factor * A_psi for an earlier-listed direction.
struct ScalarMultiple {
  Partition partition;
  Partition of;
  Rational factor;
};

struct VerificationReport {
  CartanPoint normal;
  std::size_t dimension = 0;
  BenoistCertificate benoist;
  Sl2Report sl2;
  std::vector<Equation> orthogonality;
  std::vector<ScalarMultiple> multiples;
  std::vector<Clause> clauses;

  bool ok() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.ok; });
  }
  const Clause* first_failure() const {
    for (const auto& c : clauses)
      if (!c.ok)
        return &c;
    return nullptr;
  }
};

/// The four hand-checkable orthogonality relations: each A_phi direction
/// against an explicit rearrangement of (6,6,1,-4,-9).
inline std::vector<std::pair<CartanPoint, CartanPoint>> orthogonality_relations() {
  return {
      {CartanPoint::from_integers({3, 1, 0, -1, -3}), CartanPoint::from_integers({6, -9, -4, 6, 1})},
      {CartanPoint::from_integers({2, 1, 0, -1, -2}), CartanPoint::from_integers({6, -4, -9, 6, 1})},
      {CartanPoint::from_integers({1, 1, 0, -1, -1}), CartanPoint::from_integers({6, -9, 6, -4, 1})},
      {CartanPoint::from_integers({1, 0, 0, 0, -1}), CartanPoint::from_integers({6, -9, -4, 1, 6})},
  };
}

namespace detail {

inline std::vector<Rational> sorted_entries(const CartanPoint& x) {
  auto v = x.rational_entries();
  std::sort(v.begin(), v.end());
  return v;
}

inline std::optional<Rational> proportionality(const CartanPoint& x, const CartanPoint& y) {
  const auto a = x.rational_entries();
  const auto b = y.rational_entries();
  std::optional<Rational> factor;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] == 0) {
      if (a[i] != 0)
        return std::nullopt;
      continue;
    }
    const Rational f = a[i] / b[i];
    if (factor && *factor != f)
      return std::nullopt;
    factor = f;
  }
  return factor;
}

} // namespace detail

inline VerificationReport verify_counterexample(const CartanPoint& normal = counterexample_normal()) {
  if (normal.n() != 5)
    throw InvalidArgument("the counterexample lives in sl(5,R); got n = " + std::to_string(normal.n()));
  const SplitSubalgebra h({normal});
  VerificationReport report{h.normals().front(), h.dimension(), benoist_check(h), sl2_obstruction(h), {}, {}, {}};

  report.clauses.push_back({"dimension", report.dimension == 3,
                            "dim a_h = " + std::to_string(report.dimension) + " (expected 3)"});

  const auto& b = report.benoist;
  const bool benoist_ok = b.verdict == BenoistVerdict::holds && replay(b);
  report.clauses.push_back(
      {"benoist", benoist_ok,
       b.verdict == BenoistVerdict::holds
           ? "witness " + to_tuple_string(b.witness->point) + " refuted on " +
                 std::to_string(b.witness->images_checked) + " distinct normal images"
           : "b+ lies in W.a_h"});

  bool relations_ok = true;
  const auto normal_multiset = detail::sorted_entries(report.normal);
  for (const auto& [a, image] : orthogonality_relations()) {
    const ExactScalar value = inner(a, image);
    report.orthogonality.push_back({inner_lhs(a, image), value});
    relations_ok = relations_ok && value.is_zero() && detail::sorted_entries(image) == normal_multiset;
  }
  report.clauses.push_back({"orthogonality", relations_ok,
                            relations_ok ? "4 products vanish against rearrangements of the normal"
                                         : "a product is nonzero or uses a vector outside W.(normal)"});

  const auto& s = report.sl2;
  const bool all_member =
      std::all_of(s.entries.begin(), s.entries.end(),
                  [](const Sl2Entry& e) { return e.certificate.verdict == MembershipVerdict::member; });
  report.clauses.push_back({"sl2-obstruction", all_member && !s.proper_sl2_exists && replay(s),
                            std::to_string(s.entries.size()) + " hyperbolic elements, " +
                                (all_member ? "all in W.a_h" : "some outside W.a_h")});

  for (std::size_t i = 0; i < s.entries.size(); ++i)
    for (std::size_t j = 0; j < s.entries.size(); ++j) {
      const auto& x = s.entries[i].element;
      const auto& y = s.entries[j].element;
      if (i == j || x.point.is_zero() || y.point.is_zero())
        continue;
      if (auto f = detail::proportionality(x.point, y.point); f && *f > 1) {
        report.multiples.push_back({x.source, y.source, *f});
        break;
      }
    }
  return report;
}

} // namespace weylproper
