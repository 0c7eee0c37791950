#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "weylproper/root_data.hpp"

using namespace weylproper;

namespace {

CartanPoint ints(std::initializer_list<long> v) { return CartanPoint::from_integers(v); }

ExactScalar sqrt2() { return ExactScalar::symbol(default_basis(), 0); }

std::vector<WeylElement> all_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<WeylElement> out;
  do
    out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Traceless point with entries a_i + b_i*sqrt2.
CartanPoint random_point(std::size_t n, std::mt19937_64& rng, bool symbolic) {
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<ExactScalar> e(n);
  ExactScalar sum;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    e[i] = ExactScalar(Rational(d(rng), 1 + (d(rng) + 9) % 3));
    if (symbolic)
      e[i] += Rational(d(rng)) * sqrt2();
    sum += e[i];
  }
  e[n - 1] = -sum;
  return CartanPoint(e);
}

} // namespace

TEST(CartanPoint, RejectsNonTracelessAndEmpty) {
  EXPECT_THROW(ints({1, 2, 3}), InvalidArgument);
  EXPECT_THROW(CartanPoint(std::vector<ExactScalar>{}), InvalidArgument);
  EXPECT_NO_THROW(ints({1, -1}));
  EXPECT_NO_THROW(CartanPoint({sqrt2(), -sqrt2()}));
  EXPECT_THROW(CartanPoint({sqrt2(), ExactScalar(-1)}), InvalidArgument);
  EXPECT_THROW((void)(ints({1, -1}) + ints({1, 0, -1})), InvalidArgument);
}

TEST(CartanPoint, Arithmetic) {
  const auto x = ints({6, 6, 1, -4, -9});
  EXPECT_EQ(-x, ints({-6, -6, -1, 4, 9}));
  EXPECT_EQ(x - x, CartanPoint::zero(5));
  EXPECT_EQ(Rational(2) * ints({1, 0, -1}), ints({2, 0, -2}));
  EXPECT_TRUE(CartanPoint::zero(3).is_zero());
  EXPECT_TRUE(x.is_rational());
  EXPECT_EQ(to_string(x), "6,6,1,-4,-9");
  EXPECT_EQ(to_tuple_string(x), "(6,6,1,-4,-9)");
}

TEST(CartanPoint, Parse) {
  EXPECT_EQ(parse_point("6,6,1,-4,-9"), ints({6, 6, 1, -4, -9}));
  const auto w = parse_point("sqrt2,1,0,-1,-sqrt2");
  EXPECT_EQ(w[0], sqrt2());
  EXPECT_EQ(w[4], -sqrt2());
  EXPECT_THROW(parse_point("1,2,3"), InvalidArgument);
  try {
    (void)parse_point("1,2.5,-3");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  try {
    (void)parse_point("1,-1,sqrtx");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(Weyl, ActionExamples) {
  const auto x = ints({6, 6, 1, -4, -9});
  EXPECT_EQ(act(WeylElement::identity(5), x), x);
  // w sends coordinate j to position w(j).
  const auto w = WeylElement::from_one_based({2, 1, 3, 4, 5});
  EXPECT_EQ(act(w, x), x);
  const auto cycle = WeylElement::from_one_based({2, 3, 1});
  EXPECT_EQ(act(cycle, ints({1, 2, -3})), ints({-3, 1, 2}));
  EXPECT_EQ(cycle.one_based(), (std::vector<long>{2, 3, 1}));
  EXPECT_THROW(WeylElement::from_one_based({1, 1}), InvalidArgument);
  EXPECT_THROW(WeylElement::from_one_based({0, 1}), InvalidArgument);
  EXPECT_THROW(WeylElement(std::vector<std::size_t>{0, 2}), InvalidArgument);
  EXPECT_THROW((void)act(WeylElement::identity(3), x), InvalidArgument);
}

TEST(Weyl, InnerProductExamples) {
  EXPECT_TRUE(inner(ints({3, 1, 0, -1, -3}), ints({6, -9, -4, 6, 1})).is_zero());
  EXPECT_TRUE(inner(ints({1, 2, -3}), CartanPoint::zero(3)).is_zero());
  const CartanPoint w({sqrt2(), 1, 0, -1, -sqrt2()});
  EXPECT_EQ(inner(w, ints({6, 6, 1, -4, -9})), Rational(15) * sqrt2() + ExactScalar(10));
  EXPECT_THROW((void)inner(w, w), UnsupportedProduct);
  EXPECT_THROW((void)inner(ints({1, -1}), ints({1, 0, -1})), InvalidArgument);
}

TEST(WeylProperty, GroupActionOverAllOfS4) {
  std::mt19937_64 rng(4);
  const auto group = all_permutations(4);
  ASSERT_EQ(group.size(), 24u);
  for (int trial = 0; trial < 3; ++trial) {
    const auto x = random_point(4, rng, trial > 0);
    for (const auto& u : group) {
      EXPECT_EQ(u * u.inverse(), WeylElement::identity(4));
      for (const auto& v : group)
        ASSERT_EQ(act(u * v, x), act(u, act(v, x)));
    }
  }
}

TEST(WeylProperty, InnerIsInvariantOnS5) {
  std::mt19937_64 rng(5);
  const auto group = all_permutations(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_point(5, rng, trial % 2 == 0);
    const auto y = random_point(5, rng, false);
    const auto& w = group[rng() % group.size()];
    ASSERT_EQ(inner(act(w, x), act(w, y)), inner(x, y));
    ASSERT_EQ(inner(x, y), inner(y, x));
  }
}

TEST(Chamber, DominantRepresentative) {
  const auto x = ints({-4, 6, 1, -9, 6});
  const auto d = dominant_representative(x);
  EXPECT_EQ(d.point, ints({6, 6, 1, -4, -9}));
  EXPECT_EQ(act(d.weyl, x), d.point);
  EXPECT_TRUE(is_dominant(d.point));
  EXPECT_FALSE(is_dominant(x));
  // Ties keep their order, so the identity is chosen for a dominant input.
  EXPECT_EQ(dominant_representative(ints({6, 6, 1, -4, -9})).weyl, WeylElement::identity(5));

  const CartanPoint s({1, sqrt2(), -sqrt2(), 0, -1});
  EXPECT_EQ(dominant_representative(s).point, CartanPoint({sqrt2(), 1, 0, -1, -sqrt2()}));
}

TEST(Chamber, MinusW0) {
  EXPECT_EQ(minus_w0(ints({6, 6, 1, -4, -9})), ints({9, 4, -1, -6, -6}));
  EXPECT_EQ(minus_w0(ints({3, 1, 0, -1, -3})), ints({3, 1, 0, -1, -3}));
  EXPECT_EQ(minus_w0(ints({1, -1})), ints({1, -1}));
  EXPECT_EQ(minus_w0(ints({2, -1, -1})), ints({1, 1, -2}));
}

TEST(Chamber, BPlus) {
  const auto b5 = b_plus_basis(5);
  ASSERT_EQ(b5.size(), 2u);
  EXPECT_EQ(b5[0], ints({1, 0, 0, 0, -1}));
  EXPECT_EQ(b5[1], ints({0, 1, 0, -1, 0}));
  ASSERT_EQ(b_plus_basis(2).size(), 1u);
  EXPECT_EQ(b_plus_basis(2)[0], ints({1, -1}));
  EXPECT_EQ(b_plus_basis(4).size(), 2u);
  EXPECT_EQ(b_plus_basis(4)[1], ints({0, 1, -1, 0}));
  EXPECT_THROW(b_plus_basis(1), InvalidArgument);

  EXPECT_TRUE(in_b_plus(ints({3, 1, 0, -1, -3})));
  EXPECT_TRUE(in_b_plus(CartanPoint({sqrt2(), 1, 0, -1, -sqrt2()})));
  EXPECT_TRUE(in_b_plus(CartanPoint::zero(4)));
  EXPECT_FALSE(in_b_plus(ints({1, 3, 0, -3, -1})));
  EXPECT_FALSE(in_b_plus(ints({6, 6, 1, -4, -9})));
}

TEST(ChamberProperty, DominantFormIsCanonical) {
  std::mt19937_64 rng(8);
  const auto group = all_permutations(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = random_point(5, rng, trial % 3 == 0);
    const auto d = dominant_representative(x);
    ASSERT_TRUE(is_dominant(d.point));
    ASSERT_EQ(act(d.weyl, x), d.point);
    const auto& w = group[rng() % group.size()];
    ASSERT_EQ(dominant_representative(act(w, x)).point, d.point);
    ASSERT_EQ(dominant_representative(d.point).point, d.point);
    ASSERT_EQ(minus_w0(minus_w0(x)), x);
    ASSERT_TRUE(is_dominant(minus_w0(d.point)));
  }
}

TEST(Arrangements, CountsAndEarlyStop) {
  const std::vector<std::size_t> labels{0, 0, 1, 2, 3};
  EXPECT_EQ(arrangement_count(labels), 60);
  std::size_t visited = 0;
  EXPECT_TRUE(for_each_arrangement(labels, [&](std::span<const std::size_t>) {
    ++visited;
    return true;
  }));
  EXPECT_EQ(visited, 60u);
  visited = 0;
  EXPECT_FALSE(for_each_arrangement(labels, [&](std::span<const std::size_t>) { return ++visited < 7; }));
  EXPECT_EQ(visited, 7u);
  const std::vector<std::size_t> same{0, 0, 0, 0};
  EXPECT_EQ(arrangement_count(same), 1);
}

TEST(Arrangements, ColumnLabels) {
  const std::vector<std::vector<long>> rows{{6, 6, 1, -4, -9}};
  EXPECT_EQ(column_labels(rows, 5), (std::vector<std::size_t>{0, 0, 1, 2, 3}));
  const std::vector<std::vector<long>> two{{1, 1, 0, -1, -1}, {1, 1, -2, 0, 0}};
  EXPECT_EQ(column_labels(two, 5), (std::vector<std::size_t>{0, 0, 1, 2, 2}));
}

// Each visited w must be the lexicographically smallest permutation producing
// its image, every image must appear once, and visits must be increasing.
TEST(ArrangementsProperty, MatchesBruteForceMinimalRepresentatives) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 5;
    std::vector<std::size_t> labels(n);
    for (auto& l : labels)
      l = rng() % (1 + trial % 4);

    std::map<std::vector<std::size_t>, std::vector<std::size_t>> minimal;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    do {
      std::vector<std::size_t> image(n);
      for (std::size_t i = 0; i < n; ++i)
        image[i] = labels[p[i]];
      minimal.emplace(image, p); // first hit is lexicographically smallest
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<std::size_t>> expected;
    for (const auto& [image, w] : minimal)
      expected.push_back(w);
    std::sort(expected.begin(), expected.end());

    std::vector<std::vector<std::size_t>> got;
    for_each_arrangement(labels, [&](std::span<const std::size_t> w) {
      got.emplace_back(w.begin(), w.end());
      return true;
    });
    ASSERT_EQ(got, expected) << "trial " << trial;
    ASSERT_EQ(arrangement_count(labels), static_cast<long>(expected.size()));
  }
}
