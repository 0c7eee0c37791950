#pragma once

// Exact scalars in the rational span of {1, t_1, t_2, ...}, where the t_i are
// formal symbols for reals declared linearly independent over Q together with 1.
// Zero tests are coefficient checks; signs are decided by rational interval
// refinement of the symbol enclosures.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylproper/error.hpp"

namespace weylproper {

using Integer = mpz_class;
using Rational = mpq_class;

/// Closed rational interval [lo, hi].
struct Enclosure {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  friend bool operator==(const Enclosure&, const Enclosure&) = default;
};

class IrrationalBasis {
public:
  /// Produces a strictly tighter (or equal) enclosure of the same real.
  using Refiner = std::function<Enclosure(const Enclosure&)>;

  struct Symbol {
    std::string name;
    Enclosure enclosure;
    Refiner refine; // may be empty: the enclosure is then final
  };

  explicit IrrationalBasis(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      const auto& s = symbols_[i];
      if (s.name.empty())
        throw InvalidArgument("basis symbol names must be nonempty");
      for (std::size_t j = 0; j < i; ++j)
        if (symbols_[j].name == s.name)
          throw InvalidArgument("duplicate basis symbol '" + s.name + "'");
      if (!(s.enclosure.lo > 0) || s.enclosure.lo > s.enclosure.hi)
        throw InvalidArgument("enclosure of '" + s.name + "' must satisfy 0 < lo <= hi");
    }
  }

  std::size_t size() const noexcept { return symbols_.size(); }

  /// Symbol `i` is basis element `i + 1`; element 0 is the rational unit.
  const Symbol& symbol(std::size_t i) const { return symbols_.at(i); }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i].name == name)
        return i;
    return std::nullopt;
  }

private:
  std::vector<Symbol> symbols_;
};

using BasisPtr = std::shared_ptr<const IrrationalBasis>;

namespace detail {

inline std::size_t bit_length(const Integer& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); }

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Enclosure of sqrt(p) of width 10^-digits, from an exact integer square root.
inline Enclosure sqrt_enclosure(unsigned long p, unsigned long digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Integer radicand = Integer(p) * scale * scale;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  Integer upper = root * root == radicand ? root : Integer(root + 1);
  return {make_rational(root, scale), make_rational(upper, scale)};
}

/// One outward-rounded Newton step on y^2 = p taken from the upper end. The new
/// upper bound is (hi + p/hi)/2 >= sqrt(p) and p/hi' is a lower bound; both are
/// rounded outward to a dyadic grid fine enough to keep quadratic convergence.
inline Enclosure refine_sqrt(unsigned long p, const Enclosure& e) {
  const Rational width = e.width();
  if (width == 0)
    return e;
  const Rational next_hi = (e.hi + Rational(p) / e.hi) / 2;
  const Rational next_lo = Rational(p) / next_hi;
  const Integer inverse_width = width.get_den() / width.get_num();
  const std::size_t bits = 2 * bit_length(inverse_width) + 8;
  Integer grid;
  mpz_ui_pow_ui(grid.get_mpz_t(), 2, bits);
  Enclosure out{make_rational(floor_of(next_lo * grid), grid),
                make_rational(ceil_of(next_hi * grid), grid)};
  out.lo = std::max(out.lo, e.lo);
  out.hi = std::min(out.hi, e.hi);
  return out;
}

inline bool is_prime(unsigned long v) {
  if (v < 2)
    return false;
  for (unsigned long d = 2; d * d <= v; ++d)
    if (v % d == 0)
      return false;
  return true;
}

} // namespace detail

/// Basis {sqrt2, sqrt3, sqrt5, ...} over the first `count` primes, with 20-digit
/// enclosures refined by interval Newton steps.
inline BasisPtr make_sqrt_prime_basis(std::size_t count) {
  std::vector<IrrationalBasis::Symbol> symbols;
  for (unsigned long p = 2; symbols.size() < count; ++p) {
    if (!detail::is_prime(p))
      continue;
    symbols.push_back({"sqrt" + std::to_string(p), detail::sqrt_enclosure(p, 20),
                       [p](const Enclosure& e) { return detail::refine_sqrt(p, e); }});
  }
  return std::make_shared<const IrrationalBasis>(std::move(symbols));
}

/// The shipped basis: square roots of the first 25 primes (sqrt2 .. sqrt97).
inline const BasisPtr& default_basis() {
  static const BasisPtr basis = make_sqrt_prime_basis(25);
  return basis;
}

class ExactScalar {
public:
  using Index = std::size_t; // 0 is the rational unit, i >= 1 is basis symbol i - 1
  using Term = std::pair<Index, Rational>;

  ExactScalar() = default;
  ExactScalar(const Rational& q) {
    if (q != 0) {
      terms_.emplace_back(0, q);
      terms_.back().second.canonicalize();
    }
  }
  ExactScalar(long v) : ExactScalar(Rational(v)) {}
  ExactScalar(int v) : ExactScalar(Rational(v)) {}

  static ExactScalar symbol(BasisPtr basis, std::size_t symbol, const Rational& coeff = 1) {
    if (!basis || symbol >= basis->size())
      throw InvalidArgument("symbol index out of range for basis");
    return from_terms(std::move(basis), {{symbol + 1, coeff}});
  }

  /// Builds a scalar from arbitrary (index, coefficient) pairs; duplicates are summed.
  static ExactScalar from_terms(BasisPtr basis, std::vector<Term> terms) {
    ExactScalar s;
    for (auto& [index, coeff] : terms) {
      coeff.canonicalize();
      if (index != 0 && (!basis || index > basis->size()))
        throw InvalidArgument("basis index out of range");
    }
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
      if (!s.terms_.empty() && s.terms_.back().first == t.first)
        s.terms_.back().second += t.second;
      else
        s.terms_.push_back(std::move(t));
    }
    std::erase_if(s.terms_, [](const Term& t) { return t.second == 0; });
    if (!s.is_rational())
      s.basis_ = std::move(basis);
    return s;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  const BasisPtr& basis() const noexcept { return basis_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0);
  }

  Rational coefficient(Index index) const {
    for (const auto& [i, c] : terms_)
      if (i == index)
        return c;
    return 0;
  }

  Rational rational_value() const {
    if (!is_rational())
      throw InvalidArgument("scalar is not rational");
    return coefficient(0);
  }

  ExactScalar operator-() const {
    ExactScalar r = *this;
    for (auto& t : r.terms_)
      t.second = -t.second;
    return r;
  }

  friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
    ExactScalar r;
    r.basis_ = common_basis(x, y);
    auto a = x.terms_.begin();
    auto b = y.terms_.begin();
    while (a != x.terms_.end() || b != y.terms_.end()) {
      if (b == y.terms_.end() || (a != x.terms_.end() && a->first < b->first)) {
        r.terms_.push_back(*a++);
      } else if (a == x.terms_.end() || b->first < a->first) {
        r.terms_.push_back(*b++);
      } else {
        Rational c = a->second + b->second;
        if (c != 0)
          r.terms_.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    if (r.is_rational())
      r.basis_.reset();
    return r;
  }

  friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) { return x + (-y); }

  friend ExactScalar operator*(const Rational& q, const ExactScalar& x) {
    Rational factor = q;
    factor.canonicalize();
    if (factor == 0)
      return {};
    ExactScalar r = x;
    for (auto& t : r.terms_)
      t.second *= factor;
    return r;
  }
  friend ExactScalar operator*(const ExactScalar& x, const Rational& q) { return q * x; }

  /// Defined when at least one factor is rational.
  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
    if (x.is_rational())
      return x.coefficient(0) * y;
    if (y.is_rational())
      return y.coefficient(0) * x;
    throw UnsupportedProduct();
  }

  ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
  ExactScalar& operator-=(const ExactScalar& y) { return *this = *this - y; }

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    if (x.terms_ != y.terms_)
      return false;
    return x.is_rational() || x.basis_ == y.basis_;
  }

private:
  static BasisPtr common_basis(const ExactScalar& x, const ExactScalar& y) {
    if (x.basis_ && y.basis_ && x.basis_ != y.basis_)
      throw BasisMismatch();
    return x.basis_ ? x.basis_ : y.basis_;
  }

  std::vector<Term> terms_; // sorted by index, no zero coefficients
  BasisPtr basis_;          // null iff the scalar is rational
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

struct SignOptions {
  std::size_t max_refinements = 12;
};

/// Interval enclosure of x at the given per-symbol enclosures.
inline Enclosure evaluate(const ExactScalar& x, const std::vector<Enclosure>& symbols) {
  Enclosure acc{x.coefficient(0), x.coefficient(0)};
  for (const auto& [index, c] : x.terms()) {
    if (index == 0)
      continue;
    const Enclosure& e = symbols.at(index - 1);
    if (c > 0) {
      acc.lo += c * e.lo;
      acc.hi += c * e.hi;
    } else {
      acc.lo += c * e.hi;
      acc.hi += c * e.lo;
    }
  }
  return acc;
}

inline Sign sign(const ExactScalar& x, const SignOptions& options = {}) {
  if (x.is_zero())
    return Sign::zero;
  if (x.is_rational())
    return x.coefficient(0) > 0 ? Sign::positive : Sign::negative;

  const IrrationalBasis& basis = *x.basis();
  std::vector<Enclosure> enclosures;
  enclosures.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    enclosures.push_back(basis.symbol(i).enclosure);

  for (std::size_t depth = 0;; ++depth) {
    const Enclosure value = evaluate(x, enclosures);
    if (value.lo > 0)
      return Sign::positive;
    if (value.hi < 0)
      return Sign::negative;
    if (depth == options.max_refinements)
      throw UndecidedSign(depth);
    bool refined = false;
    for (const auto& [index, c] : x.terms()) {
      if (index == 0)
        continue;
      const auto& sym = basis.symbol(index - 1);
      if (!sym.refine)
        continue;
      Enclosure next = sym.refine(enclosures[index - 1]);
      refined = refined || next != enclosures[index - 1];
      enclosures[index - 1] = std::move(next);
    }
    if (!refined)
      throw UndecidedSign(depth);
  }
}

/// sign(x - y).
inline Sign compare(const ExactScalar& x, const ExactScalar& y, const SignOptions& options = {}) {
  return sign(x - y, options);
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const ExactScalar& x) {
  if (x.is_zero())
    return "0";
  std::string out;
  auto append = [&out](std::string piece) {
    if (!out.empty() && piece.front() != '-')
      out += '+';
    out += piece;
  };
  for (const auto& [index, c] : x.terms()) {
    if (index == 0)
      continue;
    const std::string& name = x.basis()->symbol(index - 1).name;
    if (c == 1)
      append(name);
    else if (c == -1)
      append("-" + name);
    else
      append(c.get_str() + "*" + name);
  }
  if (const Rational c = x.coefficient(0); c != 0)
    append(c.get_str());
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << to_string(x); }

namespace detail {

class ScalarParser {
public:
  ScalarParser(std::string_view text, BasisPtr basis, std::size_t offset)
      : text_(text), basis_(std::move(basis)), offset_(offset) {}

  ExactScalar parse() {
    std::vector<ExactScalar::Term> terms;
    skip_space();
    if (at_end())
      fail("expected a scalar");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        fail(std::string("unexpected '") + peek() + "'");
      }
      auto term = parse_term();
      if (negative)
        term.second = -term.second;
      terms.push_back(std::move(term));
      first = false;
      skip_space();
    }
    return ExactScalar::from_terms(basis_, std::move(terms));
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, offset_ + pos_);
  }

  Integer parse_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_)
      fail("expected digits");
    if (!at_end() && (peek() == '.' || peek() == 'e' || peek() == 'E'))
      fail("decimal literals are not accepted; use p/q");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Rational parse_rational() {
    Integer num = parse_digits();
    Integer den = 1;
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      const std::size_t at = pos_;
      den = parse_digits();
      if (den == 0)
        throw ParseError("zero denominator", offset_ + at);
    }
    return make_rational(num, den);
  }

  std::size_t parse_symbol() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    std::optional<std::size_t> found;
    if (basis_)
      found = basis_->find(name);
    if (!found)
      throw ParseError("unknown symbol '" + std::string(name) + "'", offset_ + start);
    return *found;
  }

  ExactScalar::Term parse_term() {
    if (at_end())
      fail("expected a term");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational coeff = parse_rational();
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || !std::isalpha(static_cast<unsigned char>(peek())))
          fail("expected a symbol after '*'");
        return {parse_symbol() + 1, coeff};
      }
      return {0, coeff};
    }
    if (std::isalpha(static_cast<unsigned char>(c)))
      return {parse_symbol() + 1, Rational(1)};
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  BasisPtr basis_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Parses e.g. "3/2*sqrt2-1". `offset` shifts reported error positions when the
/// text is a slice of a larger input.
inline ExactScalar parse_scalar(std::string_view text, const BasisPtr& basis = default_basis(),
                                std::size_t offset = 0) {
  return detail::ScalarParser(text, basis, offset).parse();
}

} // namespace weylproper
