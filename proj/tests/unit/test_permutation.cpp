#include "doctest.h"

#include "cyclicdef/errors.hpp"
#include "cyclicdef/permutation.hpp"

using namespace cyclicdef;

TEST_CASE("compose applies the right factor first") {
  // (1,2,3,4) after (1,3): 1->3->4, 2->2->3, 3->1->2, 4->4->1.
  const auto a = parse_permutation("(1,2,3,4)", 4);
  const auto b = parse_permutation("(1,3)", 4);
  CHECK(to_cycle_string(compose(a, b)) == "(1,4)(2,3)");
  CHECK(to_cycle_string(compose(b, a)) == "(1,2)(3,4)");
}

TEST_CASE("juxtaposed cycles multiply right to left") {
  CHECK(parse_permutation("(1,2,3,4)(1,3)", 4) == parse_permutation("(1,4)(2,3)", 4));
  CHECK(parse_permutation("(1,2)(1,2)", 2).is_identity());
}

TEST_CASE("identity and degree") {
  const auto e = Permutation::identity(5);
  CHECK(e.is_identity());
  CHECK(e.degree() == 5);
  CHECK(to_cycle_string(e) == "()");
  CHECK(parse_permutation("()", 3) == Permutation::identity(3));
  CHECK(parse_permutation("(2,5)").degree() == 5);
}

TEST_CASE("element order is the lcm of cycle lengths") {
  CHECK(element_order(parse_permutation("(1,2)(3,4,5)")) == 6);
  CHECK(element_order(parse_permutation("(1,2,3,4)(5,6)")) == 4);
  CHECK(element_order(Permutation::identity(3)) == 1);
}

TEST_CASE("inverse and cycles") {
  const auto p = parse_permutation("(1,3,2)(4,5)", 6);
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(to_cycle_string(p.inverse()) == "(1,2,3)(4,5)");
  const auto cycles = p.cycles();
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0] == std::vector<Point>{0, 2, 1});
  CHECK(p.extended(8).degree() == 8);
  CHECK(p.extended(8)(7) == 7);
}

TEST_CASE("from_images rejects non-bijections") {
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_images({0, 3}), std::invalid_argument);
  CHECK(Permutation::from_images({1, 0}) == parse_permutation("(1,2)"));
}

TEST_CASE("compose rejects a degree mismatch") {
  CHECK_THROWS_AS(compose(Permutation::identity(2), Permutation::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("cycle syntax errors carry a column") {
  auto column_of = [](const char* text) -> std::size_t {
    try {
      parse_cycles(text);
    } catch (const CycleSyntaxError& e) {
      return e.column();
    }
    return 999;
  };
  CHECK(column_of("(1,2") == 4);
  CHECK(column_of("(1,1)") == 3);
  CHECK(column_of("(0,1)") == 1);
  CHECK(column_of("(1,x)") == 3);
  CHECK(column_of("(1)") != 999);
  CHECK(column_of("1,2") == 0);
  CHECK(column_of("()(1,2)") != 999);
}
