#include "doctest.h"

#include "cyclicdef/constructors.hpp"
#include "cyclicdef/errors.hpp"
#include "cyclicdef/invariants.hpp"
#include "cyclicdef/spec_parser.hpp"

using namespace cyclicdef;

TEST_CASE("parsed expressions build the expected groups") {
  struct Case {
    const char* text;
    std::size_t order;
    std::uint64_t delta;
  };
  for (const auto& c : std::vector<Case>{{"C3", 3, 1},
                                         {"D8", 8, 1},
                                         {"Q8", 8, 3},
                                         {"Dic12", 12, 5},
                                         {"C3:C4@-1", 12, 5},
                                         {"C2xD8", 16, 2},
                                         {"C2^2xD8", 32, 4},
                                         {"(C4xC2):C2@[1,1;0,1]", 16, 4},
                                         {"(C3xC3):C2@-1", 18, 4},
                                         {"C2xC2xS3", 24, 4},
                                         {"SL(2,3)", 24, 11},
                                         {"GL(2,3)", 48, 20},
                                         {"A5", 60, 28},
                                         {"S4", 24, 7},
                                         {" C4 x C2 ", 8, 2}}) {
    CAPTURE(c.text);
    const Group g = build(parse_group_spec(c.text));
    CHECK(g.order() == c.order);
    CHECK(delta(g) == c.delta);
  }
}

TEST_CASE("names round trip through the parser") {
  for (const char* text : {"C2xD8", "Q16", "A4", "C6xC2"}) {
    CHECK(spec_name(parse_group_spec(text)) == text);
  }
}

TEST_CASE("malformed expressions") {
  for (const char* text :
       {"", "C", "X4", "C3:C4", "C3:C4@", "(C2xC2", "C2x", "C2^", "D8 D8", "C3:C2@[1"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_group_spec(text), InvalidSpec);
  }
}
