#pragma once

// Decision procedures for split abelian a_h inside a = Cartan(sl(n,R)), each
// returning a certificate that can be replayed with root_data operations alone:
//
//   weyl_membership      x in W.a_h ?
//   benoist_check        b+ not contained in W.a_h ?  (non virtually abelian
//                        discontinuous groups exist)
//   sl2_obstruction      every nonzero A_phi in W.a_h ?  (no proper SL(2,R)-action)
//   kobayashi_pair_check W.a_l meets a_h only in 0 ?  (proper L-action)

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weylproper/error.hpp"
#include "weylproper/exact.hpp"
#include "weylproper/linalg.hpp"
#include "weylproper/root_data.hpp"
#include "weylproper/sl2_orbits.hpp"

namespace weylproper {

/// a_h = {x in a : <x, v_j> = 0 for every normal v_j}. Normals are stored as
/// coprime integer vectors with positive leading entry.
class SplitSubalgebra {
public:
  explicit SplitSubalgebra(const std::vector<CartanPoint>& normals) {
    if (normals.empty())
      throw InvalidArgument("a split subalgebra needs at least one normal vector");
    n_ = normals.front().n();
    if (n_ < 2)
      throw InvalidArgument("split subalgebras need n >= 2");
    for (const auto& v : normals) {
      if (v.n() != n_)
        throw InvalidArgument("normal vectors of different sizes");
      if (!v.is_rational())
        throw InvalidArgument("normal vectors must be rational");
      const auto ints = linalg::primitive(v.rational_entries());
      std::vector<Rational> entries(ints.begin(), ints.end());
      if (std::all_of(entries.begin(), entries.end(), [](const Rational& q) { return q == 0; }))
        throw InvalidArgument("normal vector is zero");
      auto canonical = CartanPoint::from_rationals(entries);
      if (std::find(normals_.begin(), normals_.end(), canonical) != normals_.end())
        throw InvalidArgument("normal vectors " + to_string(canonical) + " repeated up to scale");
      rows_.push_back(std::move(entries));
      normals_.push_back(std::move(canonical));
    }
    rank_ = linalg::rank(rows_);
    labels_ = column_labels(rows_, n_);
  }

  std::size_t n() const noexcept { return n_; }
  const std::vector<CartanPoint>& normals() const noexcept { return normals_; }
  const std::vector<std::vector<Rational>>& normal_rows() const noexcept { return rows_; }

  /// Coordinates with equal columns across the normals are interchangeable.
  const std::vector<std::size_t>& labels() const noexcept { return labels_; }

  std::size_t rank() const noexcept { return rank_; }
  std::size_t dimension() const noexcept { return n_ - 1 - rank_; }

  /// Integer basis of a_h.
  std::vector<CartanPoint> basis() const {
    linalg::Matrix m = rows_;
    m.emplace_back(n_, Rational(1));
    std::vector<CartanPoint> out;
    for (const auto& v : linalg::nullspace(m, n_)) {
      const auto ints = linalg::primitive(v);
      out.push_back(CartanPoint::from_rationals({ints.begin(), ints.end()}));
    }
    return out;
  }

  bool contains(const CartanPoint& x) const {
    return std::all_of(normals_.begin(), normals_.end(),
                       [&](const CartanPoint& v) { return inner(x, v).is_zero(); });
  }

private:
  std::size_t n_ = 0;
  std::size_t rank_ = 0;
  std::vector<CartanPoint> normals_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> labels_;
};

/// One line of a certificate: an expression and its exact value.
struct Equation {
  std::string lhs;
  ExactScalar value;

  friend bool operator==(const Equation&, const Equation&) = default;
};

inline std::string inner_lhs(const CartanPoint& x, const CartanPoint& y) {
  return "<" + to_tuple_string(x) + "," + to_tuple_string(y) + ">";
}

/// The image w^-1 . v, i.e. the vector u with u_i = v_{w(i)}; <x, u> = <w.x, v>.
inline CartanPoint normal_image(const WeylElement& w, const CartanPoint& v) {
  return act(w.inverse(), v);
}

// ---------------------------------------------------------------------------
// Membership in W.a_h

enum class MembershipVerdict { member, non_member };

inline std::string to_string(MembershipVerdict v) {
  return v == MembershipVerdict::member ? "member" : "non_member";
}

/// Why one distinct image of the normal tuple fails to annihilate the point.
struct Refutation {
  WeylElement weyl;   // the image is weyl^-1 . normals
  std::size_t normal; // first normal with a nonzero product
  ExactScalar value;  // <act(weyl, point), normals[normal]>

  friend bool operator==(const Refutation&, const Refutation&) = default;
};

struct MembershipCertificate {
  std::vector<CartanPoint> normals;
  CartanPoint point;
  MembershipVerdict verdict;
  std::optional<WeylElement> weyl;     // member: act(weyl, point) lies in a_h
  std::vector<Refutation> refutations; // non_member: one per distinct image, all of them
  std::size_t images_checked = 0;

  std::size_t n() const { return point.n(); }

  std::vector<Equation> equations() const {
    std::vector<Equation> out;
    if (verdict == MembershipVerdict::member) {
      for (const auto& v : normals)
        out.push_back({inner_lhs(point, normal_image(*weyl, v)), inner(act(*weyl, point), v)});
    } else {
      for (const auto& r : refutations)
        out.push_back({inner_lhs(point, normal_image(r.weyl, normals[r.normal])), r.value});
    }
    return out;
  }

  friend bool operator==(const MembershipCertificate&, const MembershipCertificate&) = default;
};

namespace detail {

/// <x, u> with u_i = v[w(i)], taking the all-rational fast path when possible.
class PointProducts {
public:
  explicit PointProducts(const CartanPoint& x) : x_(x) {
    if (x.is_rational())
      rational_ = x.rational_entries();
  }

  ExactScalar operator()(const std::vector<Rational>& v, std::span<const std::size_t> w) const {
    if (rational_) {
      Rational sum = 0;
      for (std::size_t i = 0; i < w.size(); ++i)
        if ((*rational_)[i] != 0)
          sum += (*rational_)[i] * v[w[i]];
      return sum;
    }
    ExactScalar sum;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (v[w[i]] != 0)
        sum += v[w[i]] * x_[i];
    return sum;
  }

  bool is_zero_for(const std::vector<Rational>& v, std::span<const std::size_t> w) const {
    if (rational_) {
      Rational sum = 0;
      for (std::size_t i = 0; i < w.size(); ++i)
        sum += (*rational_)[i] * v[w[i]];
      return sum == 0;
    }
    return (*this)(v, w).is_zero();
  }

private:
  const CartanPoint& x_;
  std::optional<std::vector<Rational>> rational_;
};

inline std::vector<std::size_t> to_vector(std::span<const std::size_t> w) { return {w.begin(), w.end()}; }

} // namespace detail

/// Decides x in W.a_h by running over the distinct images of the normal tuple,
/// first qualifying Weyl element in lexicographic order.
inline MembershipCertificate weyl_membership(const CartanPoint& x, const SplitSubalgebra& h) {
  if (x.n() != h.n())
    throw InvalidArgument("point and subalgebra have different n");
  const detail::PointProducts products(x);
  const auto& rows = h.normal_rows();

  MembershipCertificate cert{h.normals(), x, MembershipVerdict::non_member, std::nullopt, {}, 0};
  for_each_arrangement(h.labels(), [&](std::span<const std::size_t> w) {
    ++cert.images_checked;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      ExactScalar value = products(rows[j], w);
      if (!value.is_zero()) {
        cert.refutations.push_back({WeylElement(detail::to_vector(w)), j, std::move(value)});
        return true;
      }
    }
    cert.verdict = MembershipVerdict::member;
    cert.weyl = WeylElement(detail::to_vector(w));
    cert.refutations.clear();
    return false;
  });
  return cert;
}

/// Verdict only, without building refutations.
inline bool is_weyl_member(const CartanPoint& x, const SplitSubalgebra& h) {
  if (x.n() != h.n())
    throw InvalidArgument("point and subalgebra have different n");
  const detail::PointProducts products(x);
  const auto& rows = h.normal_rows();
  bool found = false;
  for_each_arrangement(h.labels(), [&](std::span<const std::size_t> w) {
    for (const auto& v : rows)
      if (!products.is_zero_for(v, w))
        return true;
    found = true;
    return false;
  });
  return found;
}

inline bool replay(const MembershipCertificate& c) {
  if (c.normals.empty())
    return false;
  for (const auto& v : c.normals)
    if (v.n() != c.n() || !v.is_rational())
      return false;
  if (c.verdict == MembershipVerdict::member) {
    if (!c.weyl || c.weyl->n() != c.n() || !c.refutations.empty())
      return false;
    const CartanPoint moved = act(*c.weyl, c.point);
    return std::all_of(c.normals.begin(), c.normals.end(),
                       [&](const CartanPoint& v) { return inner(moved, v).is_zero(); });
  }
  if (c.weyl)
    return false;
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : c.normals)
    rows.push_back(v.rational_entries());
  const auto labels = column_labels(rows, c.n());
  if (arrangement_count(labels) != static_cast<unsigned long>(c.refutations.size()) ||
      c.images_checked != c.refutations.size())
    return false;
  std::set<std::vector<Rational>> images;
  for (const auto& r : c.refutations) {
    if (r.weyl.n() != c.n() || r.normal >= c.normals.size() || r.value.is_zero())
      return false;
    if (inner(act(r.weyl, c.point), c.normals[r.normal]) != r.value)
      return false;
    std::vector<Rational> key;
    for (const auto& v : c.normals) {
      const auto image = normal_image(r.weyl, v).rational_entries();
      key.insert(key.end(), image.begin(), image.end());
    }
    if (!images.insert(std::move(key)).second)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Benoist: b+ not contained in W.a_h
//
// b+ has nonempty interior in its span and a finite union of proper subspaces
// has none, so b+ is contained in W.a_h iff span(b+) lies in a single w.a_h,
// i.e. iff some image of the normal tuple is palindromic (u_i = u_{n+1-i}).

enum class BenoistVerdict { holds, fails };

inline std::string to_string(BenoistVerdict v) { return v == BenoistVerdict::holds ? "holds" : "fails"; }

enum class WitnessStrategy { symbolic, rational };

struct BenoistCertificate {
  std::size_t n;
  std::vector<CartanPoint> normals;
  BenoistVerdict verdict;
  std::optional<MembershipCertificate> witness; // holds: a point of b+ refuted against every image
  std::optional<WeylElement> weyl;              // fails: every weyl^-1 . v_j is palindromic

  std::vector<Equation> equations() const {
    if (verdict == BenoistVerdict::holds)
      return witness->equations();
    std::vector<Equation> out;
    for (const auto& v : normals) {
      const CartanPoint image = normal_image(*weyl, v);
      for (const auto& b : b_plus_basis(n))
        out.push_back({inner_lhs(image, b), inner(image, b)});
    }
    return out;
  }

  std::size_t images_checked() const { return verdict == BenoistVerdict::holds ? witness->images_checked : 1; }

  friend bool operator==(const BenoistCertificate&, const BenoistCertificate&) = default;
};

/// Cheap multiset test: a palindromic arrangement exists iff at most n mod 2
/// coordinate classes have odd size.
inline bool palindrome_feasible(std::span<const std::size_t> labels) {
  std::vector<std::size_t> counts(labels.size(), 0);
  for (auto l : labels)
    ++counts[l];
  const auto odd = std::count_if(counts.begin(), counts.end(), [](std::size_t c) { return c % 2 == 1; });
  return static_cast<std::size_t>(odd) <= labels.size() % 2;
}

/// Lexicographically first w whose image of the normal tuple is palindromic.
inline std::optional<WeylElement> palindromic_weyl(const SplitSubalgebra& h) {
  const auto& labels = h.labels();
  if (!palindrome_feasible(labels))
    return std::nullopt;
  const std::size_t n = h.n();
  std::optional<WeylElement> found;
  for_each_arrangement(
      labels,
      [&](std::span<const std::size_t> w) {
        found = WeylElement(detail::to_vector(w));
        return false;
      },
      [&](std::size_t pos, std::span<const std::size_t> w) {
        const std::size_t mirror = n - 1 - pos;
        return mirror >= pos || labels[w[pos]] == labels[w[mirror]];
      });
  return found;
}

inline bool is_palindromic(const CartanPoint& v) {
  for (std::size_t i = 0; i < v.n() / 2; ++i)
    if (v[i] != v[v.n() - 1 - i])
      return false;
  return true;
}

namespace detail {

/// Strictly decreasing positive integer tuples with leading entry `top`, lexicographic.
template <class Visit>
bool decreasing_tuples(std::size_t length, long top, std::vector<long>& prefix, Visit& visit) {
  if (prefix.size() == length)
    return visit(prefix);
  const long below = prefix.empty() ? top + 1 : prefix.back();
  const long remaining = static_cast<long>(length - prefix.size());
  const long lo = prefix.empty() ? top : remaining;
  const long hi = prefix.empty() ? top : below - 1;
  for (long b = lo; b <= hi; ++b) {
    prefix.push_back(b);
    const bool go_on = decreasing_tuples(length, top, prefix, visit);
    prefix.pop_back();
    if (!go_on)
      return false;
  }
  return true;
}

inline CartanPoint b_plus_point(std::size_t n, const std::vector<ExactScalar>& coords) {
  std::vector<ExactScalar> entries(n);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    entries[i] = coords[i];
    entries[n - 1 - i] = -coords[i];
  }
  return CartanPoint(std::move(entries));
}

} // namespace detail

/// A point of b+ outside W.a_h; requires the Benoist condition to hold.
///
/// symbolic: sum_i c_i (e_i - e_{n+1-i}) with c = (..., sqrt5, sqrt3, sqrt2, 1),
///   decreasing and linearly independent over Q, so <x, u> = 0 forces
///   u_i = u_{n+1-i} for every i and the point avoids every non-palindromic image.
/// rational: the first integer point b_1 > ... > b_m > 0 outside W.a_h, by
///   increasing b_1 then lexicographically.
inline CartanPoint benoist_witness(const SplitSubalgebra& h,
                                   WitnessStrategy strategy = WitnessStrategy::symbolic) {
  if (palindromic_weyl(h))
    throw PreconditionViolation("b+ is contained in W.a_h: no witness exists");
  const std::size_t n = h.n();
  const std::size_t m = n / 2;
  if (strategy == WitnessStrategy::symbolic) {
    const BasisPtr& basis = default_basis();
    if (m - 1 > basis->size())
      throw InvalidArgument("not enough basis symbols for n = " + std::to_string(n));
    std::vector<ExactScalar> coords;
    for (std::size_t i = 0; i + 1 < m; ++i)
      coords.push_back(ExactScalar::symbol(basis, m - 2 - i));
    coords.emplace_back(1);
    return detail::b_plus_point(n, coords);
  }
  std::optional<CartanPoint> found;
  std::vector<long> prefix;
  auto visit = [&](const std::vector<long>& b) {
    CartanPoint x = detail::b_plus_point(n, std::vector<ExactScalar>(b.begin(), b.end()));
    if (is_weyl_member(x, h))
      return true;
    found = std::move(x);
    return false;
  };
  for (long top = static_cast<long>(m); !found; ++top)
    detail::decreasing_tuples(m, top, prefix, visit);
  return *found;
}

inline BenoistCertificate benoist_check(const SplitSubalgebra& h,
                                        WitnessStrategy strategy = WitnessStrategy::symbolic) {
  BenoistCertificate cert{h.n(), h.normals(), BenoistVerdict::fails, std::nullopt, std::nullopt};
  if (auto w = palindromic_weyl(h)) {
    cert.weyl = std::move(w);
    return cert;
  }
  cert.verdict = BenoistVerdict::holds;
  cert.witness = weyl_membership(benoist_witness(h, strategy), h);
  return cert;
}

inline bool replay(const BenoistCertificate& c) {
  if (c.normals.empty() || c.n < 2)
    return false;
  if (c.verdict == BenoistVerdict::holds) {
    if (!c.witness || c.weyl || c.witness->verdict != MembershipVerdict::non_member)
      return false;
    if (c.witness->normals != c.normals || c.witness->n() != c.n)
      return false;
    return in_b_plus(c.witness->point) && !c.witness->point.is_zero() && replay(*c.witness);
  }
  if (!c.weyl || c.witness || c.weyl->n() != c.n)
    return false;
  for (const auto& v : c.normals)
    for (const auto& b : b_plus_basis(c.n))
      if (!inner(normal_image(*c.weyl, v), b).is_zero())
        return false;
  return true;
}

// ---------------------------------------------------------------------------
// SL(2,R): the action through phi is proper iff A_phi is not in W.a_h.

struct Sl2Entry {
  HyperbolicElement element;
  MembershipCertificate certificate;

  friend bool operator==(const Sl2Entry&, const Sl2Entry&) = default;
};

struct Sl2Report {
  std::size_t n;
  std::vector<CartanPoint> normals;
  std::vector<Sl2Entry> entries; // one per partition of n, in partitions(n) order
  bool proper_sl2_exists = false; // some nonzero A_phi is a non_member

  friend bool operator==(const Sl2Report&, const Sl2Report&) = default;
};

inline Sl2Report sl2_obstruction(const SplitSubalgebra& h) {
  Sl2Report report{h.n(), h.normals(), {}, false};
  for (auto& element : hyperbolic_set(h.n())) {
    auto cert = weyl_membership(element.point, h);
    // A_{[1^n]} = 0 lies in every W.a_h and carries no noncompact direction.
    if (cert.verdict == MembershipVerdict::non_member && !element.point.is_zero())
      report.proper_sl2_exists = true;
    report.entries.push_back({std::move(element), std::move(cert)});
  }
  return report;
}

inline bool replay(const Sl2Report& r) {
  const auto expected = hyperbolic_set(r.n);
  if (r.entries.size() != expected.size())
    return false;
  bool proper = false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& e = r.entries[i];
    if (!(e.element == expected[i]) || e.certificate.point != e.element.point ||
        e.certificate.normals != r.normals || !replay(e.certificate))
      return false;
    if (e.certificate.verdict == MembershipVerdict::non_member && !e.element.point.is_zero())
      proper = true;
  }
  return proper == r.proper_sl2_exists;
}

// ---------------------------------------------------------------------------
// Pair criterion: the L-action on G/H is proper iff w.a_l meets a_h only in 0 for
// every w in W.

enum class PairVerdict { proper, not_proper, degenerate };

inline std::string to_string(PairVerdict v) {
  switch (v) {
  case PairVerdict::proper:
    return "proper";
  case PairVerdict::not_proper:
    return "not_proper";
  default:
    return "degenerate";
  }
}

struct PairCertificate {
  std::size_t n;
  std::vector<CartanPoint> normals;
  std::vector<CartanPoint> l_basis;
  PairVerdict verdict;
  std::optional<WeylElement> weyl;         // not_proper: act(weyl, a_l) meets a_h
  std::optional<CartanPoint> intersection; // not_proper: nonzero, in both
  std::size_t images_checked = 0;

  std::vector<Equation> equations() const {
    std::vector<Equation> out;
    if (intersection)
      for (const auto& v : normals)
        out.push_back({inner_lhs(*intersection, v), inner(*intersection, v)});
    return out;
  }

  friend bool operator==(const PairCertificate&, const PairCertificate&) = default;
};

namespace detail {

inline std::vector<CartanPoint> independent_subset(const std::vector<CartanPoint>& span) {
  std::vector<CartanPoint> basis;
  linalg::Matrix rows;
  for (const auto& v : span) {
    rows.push_back(v.rational_entries());
    if (linalg::rank(rows) == rows.size())
      basis.push_back(v);
    else
      rows.pop_back();
  }
  return basis;
}

/// Nonzero point of act(sigma, span l) inside a_h, if any, via
/// rank[sigma B_l | B_h] < dim l + dim h.
inline std::optional<CartanPoint> intersect(const std::vector<CartanPoint>& l_basis,
                                            const std::vector<CartanPoint>& h_basis,
                                            const WeylElement& sigma, std::size_t n) {
  std::vector<linalg::Row> columns;
  for (const auto& b : l_basis)
    columns.push_back(act(sigma, b).rational_entries());
  for (const auto& b : h_basis)
    columns.push_back(b.rational_entries());
  const linalg::Matrix m = linalg::from_columns(columns, n);
  if (linalg::rank(m) == columns.size())
    return std::nullopt;
  const auto kernel = linalg::nullspace(m, columns.size());
  linalg::Row y(n, Rational(0));
  for (std::size_t k = 0; k < l_basis.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      y[i] += kernel.front()[k] * columns[k][i];
  const auto ints = linalg::primitive(y);
  return CartanPoint::from_rationals({ints.begin(), ints.end()});
}

} // namespace detail

/// `l_span` is a rational spanning set of a_l (zero vectors and dependencies allowed).
inline PairCertificate kobayashi_pair_check(const std::vector<CartanPoint>& l_span, const SplitSubalgebra& h) {
  for (const auto& v : l_span) {
    if (v.n() != h.n())
      throw InvalidArgument("a_l and a_h live in different n");
    if (!v.is_rational())
      throw InvalidArgument("a_l must be spanned by rational vectors");
  }
  PairCertificate cert{h.n(), h.normals(), detail::independent_subset(l_span), PairVerdict::proper,
                       std::nullopt, std::nullopt, 0};
  if (cert.l_basis.empty()) {
    cert.verdict = PairVerdict::degenerate;
    return cert;
  }
  const auto h_basis = h.basis();
  std::vector<std::vector<Rational>> l_rows;
  for (const auto& b : cert.l_basis)
    l_rows.push_back(b.rational_entries());
  // Images act(sigma, a_l) are enumerated as w^-1 . B_l, sigma = w^-1.
  for_each_arrangement(column_labels(l_rows, h.n()), [&](std::span<const std::size_t> w) {
    ++cert.images_checked;
    const WeylElement sigma = WeylElement(detail::to_vector(w)).inverse();
    if (auto y = detail::intersect(cert.l_basis, h_basis, sigma, h.n())) {
      cert.verdict = PairVerdict::not_proper;
      cert.weyl = sigma;
      cert.intersection = std::move(y);
      return false;
    }
    return true;
  });
  return cert;
}

inline PairCertificate kobayashi_pair_check(const SplitSubalgebra& l, const SplitSubalgebra& h) {
  return kobayashi_pair_check(l.basis(), h);
}

inline bool replay(const PairCertificate& c) {
  if (c.normals.empty())
    return false;
  if (c.l_basis.empty())
    return c.verdict == PairVerdict::degenerate;
  const SplitSubalgebra h(c.normals);
  if (h.normals() != c.normals || detail::independent_subset(c.l_basis).size() != c.l_basis.size())
    return false;
  std::vector<std::vector<Rational>> l_rows;
  for (const auto& b : c.l_basis)
    l_rows.push_back(b.rational_entries());
  const auto labels = column_labels(l_rows, c.n);
  if (c.verdict == PairVerdict::not_proper) {
    if (!c.weyl || !c.intersection || c.intersection->is_zero() || c.weyl->n() != c.n)
      return false;
    if (!h.contains(*c.intersection))
      return false;
    linalg::Matrix rows = l_rows;
    rows.push_back(act(c.weyl->inverse(), *c.intersection).rational_entries());
    return linalg::rank(rows) == c.l_basis.size();
  }
  if (c.verdict != PairVerdict::proper || c.weyl || c.intersection)
    return false;
  if (arrangement_count(labels) != static_cast<unsigned long>(c.images_checked))
    return false;
  const auto h_basis = h.basis();
  return for_each_arrangement(labels, [&](std::span<const std::size_t> w) {
    return !detail::intersect(c.l_basis, h_basis, WeylElement(detail::to_vector(w)).inverse(), c.n);
  });
}

} // namespace weylproper
