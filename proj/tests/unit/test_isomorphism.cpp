#include "doctest.h"

#include "cyclicdef/constructors.hpp"
#include "cyclicdef/isomorphism.hpp"
#include "cyclicdef/spec_parser.hpp"

using namespace cyclicdef;

namespace {

Group g(const char* text) { return build(parse_group_spec(text)); }

}  // namespace

TEST_CASE("isomorphic pairs from different constructions") {
  CHECK(is_isomorphic(g("S3"), build(symmetric(3))));
  CHECK(is_isomorphic(g("D6"), build(symmetric(3))));
  CHECK(is_isomorphic(g("C6"), g("C3xC2")));
  CHECK(is_isomorphic(g("Dic12"), g("C3:C4@-1")));
  CHECK(is_isomorphic(g("D12"), g("C2xS3")));
  CHECK(is_isomorphic(g("A4"), g("(C2xC2):C3@[0,1;1,1]")));
  const Group s4 = build(symmetric(4));
  CHECK(is_isomorphic(s4, MultiplicationTable(s4).regular_representation()));
}

TEST_CASE("non-isomorphic pairs") {
  CHECK_FALSE(is_isomorphic(g("D8"), g("Q8")));
  CHECK_FALSE(is_isomorphic(g("C4xC2"), g("D8")));
  CHECK_FALSE(is_isomorphic(g("C4xC4"), g("C4:C4@-1")));
  CHECK_FALSE(is_isomorphic(g("(C4xC2):C2@[1,1;0,1]"), g("(C4xC2):C2@[1,0;2,1]")));
  CHECK_FALSE(is_isomorphic(g("S4"), g("SL(2,3)")));
  CHECK_FALSE(is_isomorphic(g("C2xA4"), g("SL(2,3)")));
  CHECK_FALSE(is_isomorphic(g("C3"), g("C4")));
}

TEST_CASE("groups with equal order statistics are told apart") {
  // C4 x C4 and C4 : C4 share the element order spectrum.
  const Group a = g("C4xC4");
  const Group b = g("C4:C4@-1");
  CHECK(fingerprint(a).order_spectrum == fingerprint(b).order_spectrum);
  CHECK_FALSE(is_isomorphic(a, b));
}

TEST_CASE("fingerprint") {
  const Fingerprint f = fingerprint(g("D8"));
  CHECK(f.order == 8);
  CHECK(f.order_spectrum == std::vector<std::uint64_t>{1, 2, 2, 2, 2, 2, 4, 4});
  CHECK_FALSE(f.abelian);
  CHECK(f.center_order == 2);
  CHECK(f.derived_order == 2);
  CHECK(f.exponent == 4);
  CHECK(fingerprint(g("A5")).derived_order == 60);
  CHECK(fingerprint(g("C6xC2")).abelian);
}

TEST_CASE("dedupe and classify") {
  const std::vector<Group> groups{g("C4xC2"), g("D8"), g("C2xC4"), g("Q8"), g("D8"),
                                  g("C8")};
  const auto classes = classify(groups);
  CHECK(classes == std::vector<std::size_t>{0, 1, 0, 2, 1, 3});
  const auto reps = dedupe(groups);
  REQUIRE(reps.size() == 4);
  CHECK(reps[1].name() == "D8");
}
