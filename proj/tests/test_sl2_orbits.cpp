#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "weylproper/sl2_orbits.hpp"

using namespace weylproper;

namespace {

CartanPoint ints(std::initializer_list<long> v) { return CartanPoint::from_integers(v); }

} // namespace

TEST(Partition, Validation) {
  EXPECT_THROW(Partition({1, 2}), InvalidArgument);
  EXPECT_THROW(Partition({2, 0}), InvalidArgument);
  EXPECT_EQ(Partition({3, 1, 1}).n(), 5u);
}

TEST(Partition, ExponentNotation) {
  EXPECT_EQ(to_string(Partition({5})), "[5]");
  EXPECT_EQ(to_string(Partition({3, 1, 1})), "[3,1^2]");
  EXPECT_EQ(to_string(Partition({2, 2, 1})), "[2^2,1]");
  EXPECT_EQ(to_string(Partition({1, 1, 1, 1, 1})), "[1^5]");
  EXPECT_EQ(parse_partition("[3,1^2]"), Partition({3, 1, 1}));
  EXPECT_EQ(parse_partition("4,1"), Partition({4, 1}));
  EXPECT_EQ(parse_partition("[2^2,1]"), Partition({2, 2, 1}));
  EXPECT_THROW(parse_partition("[1,2]"), InvalidArgument);
  EXPECT_THROW(parse_partition("[a]"), ParseError);
}

TEST(Partitions, OrderForFive) {
  std::vector<std::string> names;
  for (const auto& p : partitions(5))
    names.push_back(to_string(p));
  EXPECT_EQ(names, (std::vector<std::string>{"[5]", "[4,1]", "[3,2]", "[3,1^2]", "[2^2,1]", "[2,1^3]", "[1^5]"}));
}

TEST(Partitions, CountsMatchRecurrence) {
  for (long n = 1; n <= 12; ++n) {
    const auto got = partitions(static_cast<std::size_t>(n));
    ASSERT_EQ(static_cast<long>(got.size()), oracle::partition_count(n)) << n;
    const auto expected = oracle::partitions(n, n);
    for (std::size_t i = 0; i < got.size(); ++i) {
      std::vector<long> parts(got[i].parts().begin(), got[i].parts().end());
      ASSERT_EQ(parts, expected[i]);
    }
  }
  EXPECT_EQ(partitions(8).size(), 22u);
}

TEST(HyperbolicSet, FiveByFiveTable) {
  const std::vector<CartanPoint> expected{
      ints({4, 2, 0, -2, -4}), ints({3, 1, 0, -1, -3}), ints({2, 1, 0, -1, -2}), ints({2, 0, 0, 0, -2}),
      ints({1, 1, 0, -1, -1}), ints({1, 0, 0, 0, -1}), ints({0, 0, 0, 0, 0})};
  const auto set = hyperbolic_set(5);
  ASSERT_EQ(set.size(), expected.size());
  for (std::size_t i = 0; i < set.size(); ++i)
    EXPECT_EQ(set[i].point, expected[i]) << to_string(set[i].source);
}

TEST(HyperbolicSet, SmallCases) {
  EXPECT_EQ(a_phi(Partition({2, 2})).point, ints({1, 1, -1, -1}));
  EXPECT_EQ(a_phi(Partition({1})).point, CartanPoint::zero(1));
  const auto two = hyperbolic_set(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].point, ints({1, -1}));
  EXPECT_TRUE(two[1].point.is_zero());
  EXPECT_THROW(hyperbolic_set(1), InvalidArgument);
  const auto six = hyperbolic_set(6);
  EXPECT_EQ(six.size(), 11u);
  for (const auto& h : six)
    EXPECT_TRUE(in_b_plus(h.point)) << to_string(h.source);
}

TEST(HyperbolicSetProperty, InvariantsUpToTen) {
  for (std::size_t n = 2; n <= 10; ++n) {
    std::set<std::vector<Rational>> seen;
    for (const auto& h : hyperbolic_set(n)) {
      const auto& x = h.point;
      ASSERT_EQ(x.n(), n);
      Rational trace = 0;
      for (const auto& e : x.entries())
        trace += e.rational_value();
      ASSERT_EQ(trace, 0);
      ASSERT_TRUE(is_dominant(x));
      ASSERT_EQ(minus_w0(x), x);
      ASSERT_TRUE(seen.insert(x.rational_entries()).second) << "A_phi not injective at n = " << n;
      std::vector<long> parts(h.source.parts().begin(), h.source.parts().end());
      ASSERT_EQ(x, CartanPoint::from_integers(std::span<const long>(oracle::hyperbolic(parts))));
    }
    const auto set = hyperbolic_set(n);
    EXPECT_TRUE(set.back().point.is_zero());
    std::vector<long> principal;
    for (long k = 0; k < static_cast<long>(n); ++k)
      principal.push_back(static_cast<long>(n) - 1 - 2 * k);
    EXPECT_EQ(set.front().point, CartanPoint::from_integers(std::span<const long>(principal)));
  }
}
