#pragma once

// Restricted root data of type A_{n-1}: the split Cartan subspace a of sl(n,R)
// (traceless diagonal matrices, stored as coordinate vectors), the symmetric
// group acting by coordinate permutation, the closed dominant chamber, and the
// cone b+ of dominant points fixed by x -> -w0.x.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylproper/error.hpp"
#include "weylproper/exact.hpp"

namespace weylproper {

/// A point of a: n exact coordinates summing to zero.
class CartanPoint {
public:
  explicit CartanPoint(std::vector<ExactScalar> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
      throw InvalidArgument("a Cartan point needs at least one coordinate");
    ExactScalar sum;
    for (const auto& e : entries_)
      sum += e;
    if (!sum.is_zero())
      throw InvalidArgument("coordinates sum to " + to_string(sum) + ", not 0 (not traceless)");
  }

  static CartanPoint zero(std::size_t n) { return CartanPoint(std::vector<ExactScalar>(n)); }

  static CartanPoint from_rationals(const std::vector<Rational>& values) {
    return CartanPoint(std::vector<ExactScalar>(values.begin(), values.end()));
  }

  static CartanPoint from_integers(std::span<const long> values) {
    std::vector<ExactScalar> entries;
    entries.reserve(values.size());
    for (long v : values)
      entries.emplace_back(v);
    return CartanPoint(std::move(entries));
  }
  static CartanPoint from_integers(std::initializer_list<long> values) {
    return from_integers(std::span<const long>(values.begin(), values.size()));
  }

  std::size_t n() const noexcept { return entries_.size(); }
  const ExactScalar& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<ExactScalar>& entries() const noexcept { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_zero(); });
  }
  bool is_rational() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_rational(); });
  }

  std::vector<Rational> rational_entries() const {
    std::vector<Rational> out;
    out.reserve(n());
    for (const auto& e : entries_)
      out.push_back(e.rational_value());
    return out;
  }

  CartanPoint operator-() const {
    auto out = entries_;
    for (auto& e : out)
      e = -e;
    return CartanPoint(Unchecked{}, std::move(out));
  }

  friend CartanPoint operator+(const CartanPoint& x, const CartanPoint& y) {
    check_same_size(x, y);
    auto out = x.entries_;
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] += y.entries_[i];
    return CartanPoint(Unchecked{}, std::move(out));
  }
  friend CartanPoint operator-(const CartanPoint& x, const CartanPoint& y) { return x + (-y); }

  friend CartanPoint operator*(const Rational& q, const CartanPoint& x) {
    auto out = x.entries_;
    for (auto& e : out)
      e = q * e;
    return CartanPoint(Unchecked{}, std::move(out));
  }

  friend bool operator==(const CartanPoint&, const CartanPoint&) = default;

  static void check_same_size(const CartanPoint& x, const CartanPoint& y) {
    if (x.n() != y.n())
      throw InvalidArgument("Cartan points of different sizes (" + std::to_string(x.n()) + " vs " +
                            std::to_string(y.n()) + ")");
  }

private:
  struct Unchecked {};
  CartanPoint(Unchecked, std::vector<ExactScalar> entries) : entries_(std::move(entries)) {}

  std::vector<ExactScalar> entries_;
};

/// "6,6,1,-4,-9"
inline std::string to_string(const CartanPoint& x) {
  std::string out;
  for (std::size_t i = 0; i < x.n(); ++i) {
    if (i)
      out += ',';
    out += to_string(x[i]);
  }
  return out;
}

/// "(6,6,1,-4,-9)"
inline std::string to_tuple_string(const CartanPoint& x) { return "(" + to_string(x) + ")"; }

/// Comma-separated exact scalars; rejected unless the sum is exactly zero.
inline CartanPoint parse_point(std::string_view text, const BasisPtr& basis = default_basis()) {
  std::vector<ExactScalar> entries;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    entries.push_back(parse_scalar(text.substr(start, end - start), basis, start));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return CartanPoint(std::move(entries));
}

/// A permutation w of {0..n-1}, stored by images w(i). Acts on the left:
/// (w.x)_{w(j)} = x_j, so that (uv).x = u.(v.x) with (uv)(i) = u(v(i)).
class WeylElement {
public:
  static WeylElement identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    return WeylElement(std::move(images));
  }

  explicit WeylElement(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto i : images_) {
      if (i >= images_.size() || seen[i])
        throw InvalidArgument("image array is not a permutation");
      seen[i] = true;
    }
  }

  static WeylElement from_one_based(const std::vector<long>& images) {
    std::vector<std::size_t> zero_based;
    zero_based.reserve(images.size());
    for (long i : images) {
      if (i < 1)
        throw InvalidArgument("one-based permutation entries must be >= 1");
      zero_based.push_back(static_cast<std::size_t>(i - 1));
    }
    return WeylElement(std::move(zero_based));
  }

  std::size_t n() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  std::vector<long> one_based() const {
    std::vector<long> out;
    out.reserve(n());
    for (auto i : images_)
      out.push_back(static_cast<long>(i) + 1);
    return out;
  }

  WeylElement inverse() const {
    std::vector<std::size_t> inv(n());
    for (std::size_t i = 0; i < n(); ++i)
      inv[images_[i]] = i;
    return WeylElement(Unchecked{}, std::move(inv));
  }

  friend WeylElement operator*(const WeylElement& u, const WeylElement& v) {
    if (u.n() != v.n())
      throw InvalidArgument("composing permutations of different degrees");
    std::vector<std::size_t> out(u.n());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = u.images_[v.images_[i]];
    return WeylElement(Unchecked{}, std::move(out));
  }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

private:
  struct Unchecked {};
  WeylElement(Unchecked, std::vector<std::size_t> images) : images_(std::move(images)) {}

  std::vector<std::size_t> images_;
};

/// Coordinate permutation of any vector: result[w(j)] = x[j].
template <class T>
std::vector<T> permute(const WeylElement& w, const std::vector<T>& x) {
  if (w.n() != x.size())
    throw InvalidArgument("permutation degree does not match vector size");
  std::vector<T> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j)
    out[w(j)] = x[j];
  return out;
}

inline CartanPoint act(const WeylElement& w, const CartanPoint& x) {
  return CartanPoint(permute(w, x.entries()));
}

/// The coordinate inner product sum x_i y_i (the Killing form up to the factor 2n).
/// Each coordinate pair needs a rational factor.
inline ExactScalar inner(const CartanPoint& x, const CartanPoint& y) {
  CartanPoint::check_same_size(x, y);
  ExactScalar sum;
  for (std::size_t i = 0; i < x.n(); ++i)
    sum += x[i] * y[i];
  return sum;
}

/// Reverse and negate: (-w0.x)_i = -x_{n+1-i}.
inline CartanPoint minus_w0(const CartanPoint& x) {
  std::vector<ExactScalar> out(x.entries().rbegin(), x.entries().rend());
  for (auto& e : out)
    e = -e;
  return CartanPoint(std::move(out));
}

struct DominantForm {
  CartanPoint point;  // weakly decreasing
  WeylElement weyl;   // point == act(weyl, x)
};

/// Sorts coordinates into weakly decreasing order. Ties keep their original
/// order, which makes `weyl` the lexicographically smallest such permutation.
inline DominantForm dominant_representative(const CartanPoint& x, const SignOptions& options = {}) {
  std::vector<std::size_t> order(x.n());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return compare(x[a], x[b], options) == Sign::positive;
  });
  // order[k] is the source of position k, so order is w^-1.
  WeylElement w = WeylElement(order).inverse();
  CartanPoint sorted = act(w, x);
  return {std::move(sorted), std::move(w)};
}

inline bool is_dominant(const CartanPoint& x, const SignOptions& options = {}) {
  for (std::size_t i = 0; i + 1 < x.n(); ++i)
    if (compare(x[i], x[i + 1], options) == Sign::negative)
      return false;
  return true;
}

/// Basis e_i - e_{n+1-i}, i = 1..floor(n/2), of the span of b+.
inline std::vector<CartanPoint> b_plus_basis(std::size_t n) {
  if (n < 2)
    throw InvalidArgument("b+ needs n >= 2");
  std::vector<CartanPoint> basis;
  for (std::size_t i = 0; i < n / 2; ++i) {
    std::vector<Rational> v(n, Rational(0));
    v[i] = 1;
    v[n - 1 - i] = -1;
    basis.push_back(CartanPoint::from_rationals(v));
  }
  return basis;
}

inline bool in_b_plus(const CartanPoint& x, const SignOptions& options = {}) {
  return minus_w0(x) == x && is_dominant(x, options);
}

// ---------------------------------------------------------------------------
// Distinct Weyl images of a labelled coordinate tuple.
//
// Coordinates carrying equal labels are interchangeable (the repetition
// stabilizer). A distinct image is represented by the lexicographically
// smallest w with image[i] = source[w(i)], i.e. image = w^-1 . source; those
// representatives are visited in increasing lexicographic order.

/// Labels coordinate i by the value of column i across `rows`.
template <class T>
std::vector<std::size_t> column_labels(const std::vector<std::vector<T>>& rows, std::size_t n) {
  std::vector<std::vector<T>> distinct;
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<T> column;
    column.reserve(rows.size());
    for (const auto& r : rows)
      column.push_back(r[i]);
    auto it = std::find(distinct.begin(), distinct.end(), column);
    labels[i] = static_cast<std::size_t>(it - distinct.begin());
    if (it == distinct.end())
      distinct.push_back(std::move(column));
  }
  return labels;
}

/// n! / prod(multiplicity!) for the label multiset.
inline Integer arrangement_count(std::span<const std::size_t> labels) {
  std::map<std::size_t, unsigned long> counts;
  Integer total = 1;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    total *= static_cast<unsigned long>(i + 1);
    total /= static_cast<unsigned long>(++counts[labels[i]]);
  }
  return total;
}

namespace detail {

template <class Prefix, class Visit>
bool arrange(std::size_t pos, std::span<const std::size_t> labels,
             const std::vector<std::size_t>& previous_same, std::vector<bool>& used,
             std::vector<std::size_t>& w, Prefix& accept_prefix, Visit& visit) {
  const std::size_t n = labels.size();
  if (pos == n)
    return visit(std::span<const std::size_t>(w));
  for (std::size_t c = 0; c < n; ++c) {
    if (used[c] || (previous_same[c] != n && !used[previous_same[c]]))
      continue;
    w[pos] = c;
    if (!accept_prefix(pos, std::span<const std::size_t>(w.data(), pos + 1)))
      continue;
    used[c] = true;
    const bool go_on = arrange(pos + 1, labels, previous_same, used, w, accept_prefix, visit);
    used[c] = false;
    if (!go_on)
      return false;
  }
  return true;
}

} // namespace detail

/// Calls visit(w) for each distinct arrangement; stops early when visit returns
/// false. accept_prefix(pos, w[0..pos]) may prune partial arrangements.
/// Returns true iff the enumeration ran to completion.
template <class Visit, class Prefix>
bool for_each_arrangement(std::span<const std::size_t> labels, Visit&& visit, Prefix&& accept_prefix) {
  const std::size_t n = labels.size();
  std::vector<std::size_t> previous_same(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = c; d-- > 0;)
      if (labels[d] == labels[c]) {
        previous_same[c] = d;
        break;
      }
  std::vector<bool> used(n, false);
  std::vector<std::size_t> w(n);
  return detail::arrange(0, labels, previous_same, used, w, accept_prefix, visit);
}

template <class Visit>
bool for_each_arrangement(std::span<const std::size_t> labels, Visit&& visit) {
  return for_each_arrangement(labels, std::forward<Visit>(visit),
                              [](std::size_t, std::span<const std::size_t>) { return true; });
}

} // namespace weylproper
