#include "doctest.h"

#include "brute.hpp"
#include "cyclicdef/constructors.hpp"
#include "cyclicdef/errors.hpp"
#include "cyclicdef/invariants.hpp"

using namespace cyclicdef;

TEST_CASE("orders and names") {
  struct Case {
    GroupSpec spec;
    std::size_t order;
    const char* name;
  };
  const std::vector<Case> cases{
      {cyclic(1), 1, "C1"},
      {cyclic(7), 7, "C7"},
      {abelian({4, 2, 2}), 16, "C4xC2xC2"},
      {dihedral(2), 2, "C2"},
      {dihedral(4), 4, "C2xC2"},
      {dihedral(6), 6, "S3"},
      {dihedral(14), 14, "D14"},
      {dicyclic(8), 8, "Q8"},
      {dicyclic(16), 16, "Q16"},
      {dicyclic(12), 12, "Dic12"},
      {symmetric(4), 24, "S4"},
      {alternating(5), 60, "A5"},
      {sl23(), 24, "SL(2,3)"},
      {gl23(), 48, "GL(2,3)"},
      {direct_product({cyclic(2), dihedral(8)}), 16, "C2xD8"},
      {semidirect(cyclic(3), cyclic(4), spec::PowerAction{{-1}}), 12, "C3:C4"},
      {semidirect(abelian({4, 2}), cyclic(2), spec::ImageAction{{{{1, 1}, {0, 1}}}}), 16,
       "(C4xC2):C2"},
  };
  for (const auto& c : cases) {
    const Group g = build(c.spec);
    CAPTURE(c.name);
    CHECK(g.order() == c.order);
    CHECK(g.name() == c.name);
    CHECK(spec_name(c.spec) == c.name);
  }
}

TEST_CASE("dihedral(6) is S3 by name but built as a dihedral group") {
  // S3 is dihedral of order 6; one constructor serves both.
  CHECK(delta(build(dihedral(6))) == 1);
}

TEST_CASE("small delta suite") {
  const auto suite = small_delta_suite();
  REQUIRE(suite.size() == 25);
  std::map<std::uint64_t, int> per_delta;
  for (const auto& entry : suite) {
    CAPTURE(entry.group.name());
    const std::uint64_t naive = entry.group.order() - brute::cyclic_subgroups(entry.group);
    CHECK(naive == entry.expected_delta);
    CHECK(delta(entry.group) == entry.expected_delta);
    ++per_delta[entry.expected_delta];
  }
  CHECK(per_delta == std::map<std::uint64_t, int>{{1, 4}, {2, 4}, {3, 3}, {4, 11}, {5, 3}});
}

TEST_CASE("named groups outside the suite") {
  CHECK(delta(build(sl23())) == 11);
  CHECK(delta(build(gl23())) == 20);
  CHECK(delta(build(symmetric(4))) == 7);
  CHECK(delta(build(alternating(4))) == 4);
  CHECK(delta(build(alternating(5))) == 28);
}

TEST_CASE("D8 x C2^k") {
  for (std::uint32_t k = 0; k <= 3; ++k) {
    const Group g = build_d8_c2k(k);
    CHECK(g.order() == (8u << k));
    CHECK(delta(g) == (1u << k));
  }
  CHECK(build_d8_c2k(0).name() == "D8");
  CHECK(build_d8_c2k(2).name() == "C2xC2xD8");
}

TEST_CASE("invalid specs") {
  CHECK_THROWS_AS(build(cyclic(0)), InvalidSpec);
  CHECK_THROWS_AS(build(dihedral(5)), InvalidSpec);
  CHECK_THROWS_AS(build(dicyclic(6)), InvalidSpec);
  CHECK_THROWS_AS(build(abelian({})), InvalidSpec);
  // x -> x^2 on C5 has order 4, so C2 cannot act that way.
  CHECK_THROWS_AS(build(semidirect(cyclic(5), cyclic(2), spec::PowerAction{{2}})), InvalidSpec);
  // Not an automorphism at all.
  CHECK_THROWS_AS(build(semidirect(cyclic(4), cyclic(2), spec::PowerAction{{2}})), InvalidSpec);
  CHECK_THROWS_AS(build(symmetric(6), 100), ClosureCapExceeded);
}

TEST_CASE("semidirect product of C5 by C4 acting by squaring") {
  const Group g = build(semidirect(cyclic(5), cyclic(4), spec::PowerAction{{2}}));
  CHECK(g.order() == 20);
  CHECK(delta(g) == 8);
}
