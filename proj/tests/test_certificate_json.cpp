#include <gtest/gtest.h>

#include "weylproper/certificate_json.hpp"

using namespace weylproper;
using Json = nlohmann::json;
namespace wj = weylproper::json;

namespace {

CartanPoint ints(std::initializer_list<long> v) { return CartanPoint::from_integers(v); }

SplitSubalgebra counterexample_h() { return SplitSubalgebra({ints({6, 6, 1, -4, -9})}); }

// Serialize to text and back so the test covers the wire format, not just the DOM.
Json through_text(const Json& j) { return Json::parse(j.dump()); }

} // namespace

TEST(CertificateJson, MembershipRoundTrip) {
  const CartanPoint w({ExactScalar::symbol(default_basis(), 0), 1, 0, -1, -ExactScalar::symbol(default_basis(), 0)});
  for (const auto& x : {w, ints({1, 1, 0, -1, -1}), CartanPoint::zero(5)}) {
    const auto c = weyl_membership(x, counterexample_h());
    const auto back = wj::membership_from_json(through_text(wj::to_json(c)));
    EXPECT_EQ(back, c);
    EXPECT_TRUE(replay(back));
  }
}

TEST(CertificateJson, MembershipSchema) {
  const auto c = weyl_membership(ints({1, 1, 0, -1, -1}), counterexample_h());
  const auto j = wj::to_json(c);
  EXPECT_EQ(j.at("kind"), "membership");
  EXPECT_EQ(j.at("n"), 5);
  EXPECT_EQ(j.at("verdict"), "member");
  EXPECT_EQ(j.at("normals"), Json::parse(R"([["6","6","1","-4","-9"]])"));
  EXPECT_EQ(j.at("weyl").size(), 5u);
  EXPECT_EQ(j.at("equations").at(0).at("lhs"), "<(1,1,0,-1,-1),(6,-9,6,1,-4)>");
  EXPECT_EQ(j.at("equations").at(0).at("value"), "0");
  EXPECT_EQ(j.at("images_checked"), c.images_checked);
}

TEST(CertificateJson, BenoistRoundTrip) {
  for (const auto& h : {counterexample_h(), SplitSubalgebra({ints({1, 1, -1, -1, 0})}), SplitSubalgebra({ints({1, -1})})}) {
    const auto c = benoist_check(h);
    const auto j = wj::to_json(c);
    const auto back = wj::benoist_from_json(through_text(j));
    EXPECT_EQ(back, c);
    EXPECT_TRUE(replay(back));
    EXPECT_EQ(j.at("verdict"), to_string(c.verdict));
  }
  const auto j = wj::to_json(benoist_check(counterexample_h()));
  EXPECT_EQ(j.at("witness"), Json::parse(R"(["sqrt2","1","0","-1","-sqrt2"])"));
  EXPECT_EQ(j.at("images_checked"), 60);
  EXPECT_EQ(j.at("equations").size(), 60u);
}

TEST(CertificateJson, Sl2RoundTrip) {
  for (const auto& h : {counterexample_h(), SplitSubalgebra({ints({1, 2, 3, -1, -5})})}) {
    const auto r = sl2_obstruction(h);
    const auto j = wj::to_json(r);
    const auto back = wj::sl2_from_json(through_text(j));
    EXPECT_EQ(back, r);
    EXPECT_TRUE(replay(back));
  }
  const auto j = wj::to_json(sl2_obstruction(counterexample_h()));
  EXPECT_EQ(j.at("verdict"), "no_proper_sl2");
  EXPECT_EQ(j.at("entries").size(), 7u);
  EXPECT_EQ(j.at("entries").at(3).at("partition"), "[3,1^2]");
  EXPECT_EQ(j.at("equations").size(), 7u);
}

TEST(CertificateJson, PairRoundTrip) {
  const auto h = counterexample_h();
  for (const auto& span : std::vector<std::vector<CartanPoint>>{
           {ints({3, 1, 0, -1, -3})}, {ints({5, 1, 0, -1, -5})}, {CartanPoint::zero(5)}, h.basis()}) {
    const auto c = kobayashi_pair_check(span, h);
    const auto back = wj::pair_from_json(through_text(wj::to_json(c)));
    EXPECT_EQ(back, c);
    EXPECT_TRUE(replay(back));
  }
}

TEST(CertificateJson, TamperingIsCaughtByReplay) {
  auto j = wj::to_json(weyl_membership(ints({5, 1, 0, -1, -5}), counterexample_h()));
  j["equations"][0]["value"] = "7";
  EXPECT_FALSE(replay(wj::membership_from_json(j)));

  auto b = wj::to_json(benoist_check(counterexample_h()));
  b["membership"]["point"] = Json::parse(R"(["1","1","0","-1","-1"])");
  EXPECT_FALSE(replay(wj::benoist_from_json(b)));
}

TEST(CertificateJson, MalformedInputsAreRejected) {
  auto j = wj::to_json(weyl_membership(ints({1, 1, 0, -1, -1}), counterexample_h()));
  EXPECT_THROW((void)wj::benoist_from_json(j), InvalidArgument);
  j["verdict"] = "maybe";
  EXPECT_THROW((void)wj::membership_from_json(j), InvalidArgument);
  j["verdict"] = "member";
  j["point"] = Json::parse(R"(["1","1.5"])");
  EXPECT_THROW((void)wj::membership_from_json(j), ParseError);
}
