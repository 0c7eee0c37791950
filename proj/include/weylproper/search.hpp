#pragma once

// Exhaustive search for split abelian a_h (given by bounded integer normals)
// where Benoist's condition holds but every nonzero A_phi lies in W.a_h:
// discontinuous non virtually abelian groups exist, proper SL(2,R)-actions do not.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "weylproper/criteria.hpp"
#include "weylproper/error.hpp"
#include "weylproper/linalg.hpp"

namespace weylproper {

using IntVector = std::vector<long>;

struct SearchSpec {
  std::size_t n = 5;
  long bound = 9;
  std::size_t codim = 1;
  std::optional<std::size_t> limit;
  std::size_t jobs = 1;

  void validate() const {
    if (n < 2)
      throw InvalidArgument("search needs n >= 2");
    if (bound < 1)
      throw InvalidArgument("search needs bound >= 1");
    if (codim < 1 || codim > n - 1)
      throw InvalidArgument("search needs 1 <= codim <= n-1");
    if (jobs < 1)
      throw InvalidArgument("search needs jobs >= 1");
    if (limit && *limit < 1)
      throw InvalidArgument("search limit must be >= 1");
  }
};

struct SearchHit {
  std::vector<CartanPoint> normals;
  BenoistCertificate benoist;
  Sl2Report sl2;
};

struct SearchStats {
  std::size_t candidates = 0;
  std::size_t palindrome_rejects = 0;
  std::size_t sl2_rejects = 0;
  std::size_t hits = 0;
  bool truncated = false;
};

struct SearchResult {
  std::vector<SearchHit> hits;
  SearchStats stats;
};

inline long gcd_of(const IntVector& v) {
  long g = 0;
  for (long x : v)
    g = std::gcd(g, x);
  return g;
}

/// Class representative under coordinate permutations, negation and -w0:
/// the larger of sort_desc(v) and sort_desc(-v). (-w0 is negation followed by
/// a permutation, so it adds nothing beyond the other two.)
inline IntVector canonical_form(IntVector v) {
  IntVector neg(v.size());
  std::transform(v.begin(), v.end(), neg.begin(), [](long x) { return -x; });
  std::sort(v.begin(), v.end(), std::greater<>());
  std::sort(neg.begin(), neg.end(), std::greater<>());
  return std::max(v, neg);
}

/// Every primitive traceless integer vector with entries in [-bound, bound],
/// one per symmetry class, as ascending-sorted canonical representatives.
inline std::vector<IntVector> canonical_normals(std::size_t n, long bound) {
  if (bound < 1)
    throw InvalidArgument("bound must be >= 1");
  std::vector<IntVector> out;
  IntVector current;
  auto extend = [&](auto& self, long cap, long sum) -> void {
    const std::size_t left = n - current.size();
    if (left == 0) {
      if (sum == 0 && gcd_of(current) == 1 && canonical_form(current) == current)
        out.push_back(current);
      return;
    }
    // The remaining entries lie in [-bound, cap], so the sum stays reachable.
    for (long x = -bound; x <= cap; ++x) {
      const long rest_max = x * static_cast<long>(left - 1);
      const long rest_min = -bound * static_cast<long>(left - 1);
      if (sum + x + rest_max < 0 || sum + x + rest_min > 0)
        continue;
      current.push_back(x);
      self(self, x, sum + x);
      current.pop_back();
    }
  };
  extend(extend, bound, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline CartanPoint to_point(const IntVector& v) { return CartanPoint::from_integers(std::span<const long>(v)); }

/// Primitive traceless vectors in the box with positive leading entry (one per line).
inline std::vector<IntVector> box_normals(std::size_t n, long bound) {
  std::vector<IntVector> out;
  IntVector current(n, -bound);
  while (true) {
    long sum = std::accumulate(current.begin(), current.end(), 0L);
    if (sum == 0 && gcd_of(current) == 1) {
      auto lead = std::find_if(current.begin(), current.end(), [](long x) { return x != 0; });
      if (*lead > 0)
        out.push_back(current);
    }
    std::size_t i = n;
    while (i > 0 && current[i - 1] == bound)
      current[--i] = -bound;
    if (i == 0)
      break;
    ++current[i - 1];
  }
  return out;
}

/// Permutation-invariant key of span(rows): the lexicographically largest
/// reduced echelon form over all column permutations.
inline std::vector<Rational> span_key(const std::vector<IntVector>& rows, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<Rational> best;
  do {
    linalg::Matrix m;
    for (const auto& r : rows) {
      linalg::Row row(n);
      for (std::size_t i = 0; i < n; ++i)
        row[i] = r[perm[i]];
      m.push_back(std::move(row));
    }
    std::vector<Rational> flat;
    for (const auto& row : linalg::rref(std::move(m)).rows)
      flat.insert(flat.end(), row.begin(), row.end());
    if (best.empty() || best < flat)
      best = std::move(flat);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Tuples of `codim` independent normals, one per span up to permutation,
/// the first normal a canonical representative; sorted lexicographically.
inline std::vector<std::vector<IntVector>> candidate_tuples(std::size_t n, long bound, std::size_t codim) {
  std::vector<std::vector<IntVector>> out;
  if (codim == 1) {
    for (auto& v : canonical_normals(n, bound))
      out.push_back({std::move(v)});
    return out;
  }
  const auto firsts = canonical_normals(n, bound);
  const auto pool = box_normals(n, bound);
  std::map<std::vector<Rational>, std::vector<IntVector>> unique;
  std::vector<IntVector> tuple;
  auto extend = [&](auto& self, std::size_t start) -> void {
    if (tuple.size() == codim) {
      linalg::Matrix m;
      for (const auto& r : tuple)
        m.emplace_back(r.begin(), r.end());
      if (linalg::rank(std::move(m)) != codim)
        return;
      unique.try_emplace(span_key(tuple, n), tuple);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      if (std::find(tuple.begin(), tuple.end(), pool[i]) != tuple.end())
        continue;
      tuple.push_back(pool[i]);
      self(self, i + 1);
      tuple.pop_back();
    }
  };
  for (const auto& first : firsts) {
    tuple = {first};
    extend(extend, 0);
  }
  for (auto& [key, t] : unique)
    out.push_back(std::move(t));
  std::sort(out.begin(), out.end());
  return out;
}

enum class Outcome { palindrome_reject, sl2_reject, hit };

/// Fast predicate: palindrome feasibility first, then the nonzero A_phi by
/// increasing Weyl orbit size.
inline Outcome classify(const SplitSubalgebra& h, const std::vector<CartanPoint>& probes) {
  if (palindrome_feasible(h.labels()))
    return Outcome::palindrome_reject;
  for (const auto& x : probes)
    if (!is_weyl_member(x, h))
      return Outcome::sl2_reject;
  return Outcome::hit;
}

inline std::vector<CartanPoint> ordered_probes(std::size_t n) {
  std::vector<std::pair<Integer, CartanPoint>> probes;
  for (const auto& e : hyperbolic_set(n)) {
    if (e.point.is_zero())
      continue;
    std::vector<std::vector<Rational>> rows{e.point.rational_entries()};
    probes.emplace_back(arrangement_count(column_labels(rows, n)), e.point);
  }
  std::stable_sort(probes.begin(), probes.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<CartanPoint> out;
  for (auto& p : probes)
    out.push_back(std::move(p.second));
  return out;
}

} // namespace detail

/// Candidates are evaluated in fixed-size blocks; inside a block job t takes
/// indices t, t+jobs, ... The hit list and counters depend only on the search parameters,
/// never on `jobs`.
inline SearchResult hunt(const SearchSpec& spec) {
  spec.validate();
  constexpr std::size_t block = 512;
  const auto candidates = detail::candidate_tuples(spec.n, spec.bound, spec.codim);
  const auto probes = detail::ordered_probes(spec.n);

  SearchResult result;
  std::vector<detail::Outcome> outcomes;
  for (std::size_t begin = 0; begin < candidates.size(); begin += block) {
    const std::size_t end = std::min(candidates.size(), begin + block);
    outcomes.assign(end - begin, detail::Outcome::palindrome_reject);
    auto work = [&](std::size_t job) {
      for (std::size_t i = begin + job; i < end; i += spec.jobs) {
        std::vector<CartanPoint> normals;
        for (const auto& v : candidates[i])
          normals.push_back(detail::to_point(v));
        outcomes[i - begin] = detail::classify(SplitSubalgebra(normals), probes);
      }
    };
    if (spec.jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (std::size_t t = 0; t < spec.jobs; ++t)
        threads.emplace_back(work, t);
      for (auto& th : threads)
        th.join();
    }
    for (std::size_t i = begin; i < end; ++i) {
      ++result.stats.candidates;
      switch (outcomes[i - begin]) {
      case detail::Outcome::palindrome_reject:
        ++result.stats.palindrome_rejects;
        break;
      case detail::Outcome::sl2_reject:
        ++result.stats.sl2_rejects;
        break;
      case detail::Outcome::hit: {
        if (spec.limit && result.hits.size() == *spec.limit) {
          result.stats.truncated = true;
          break;
        }
        std::vector<CartanPoint> normals;
        for (const auto& v : candidates[i])
          normals.push_back(detail::to_point(v));
        const SplitSubalgebra h(normals);
        result.hits.push_back({h.normals(), benoist_check(h), sl2_obstruction(h)});
        break;
      }
      }
    }
    if (spec.limit && result.hits.size() == *spec.limit && end < candidates.size()) {
      result.stats.truncated = true;
      break;
    }
  }
  result.stats.hits = result.hits.size();
  return result;
}

} // namespace weylproper
