#include "doctest.h"

#include "json.hpp"

#include "cyclicdef/catalog.hpp"
#include "cyclicdef/census.hpp"
#include "cyclicdef/constructors.hpp"

using namespace cyclicdef;

TEST_CASE("count words") {
  CHECK(count_word(1) == "One");
  CHECK(count_word(4) == "Four");
  CHECK(count_word(11) == "Eleven");
  CHECK(count_word(21) == "Twenty-one");
  CHECK(count_word(30) == "Thirty");
  CHECK(count_word(59) == "Fifty-nine");
  CHECK(count_word(100) == "One hundred");
  CHECK(count_word(0) == "Zero");
}

TEST_CASE("census over a tiny catalog") {
  const Catalog c = parse_catalog(R"(!complete 1-8
1 1 C1 : ()
2 1 C2 : (1,2)
3 1 C3 : (1,2,3)
4 1 C4 : (1,2,3,4)
4 2 C2xC2 : (1,2) ; (3,4)
5 1 C5 : (1,2,3,4,5)
6 1 S3 : (1,2,3) ; (1,2)
6 2 C6 : (1,2,3)(4,5)
7 1 C7 : (1,2,3,4,5,6,7)
8 1 C8 : (1,2,3,4,5,6,7,8)
8 2 C4xC2 : (1,2,3,4) ; (5,6)
8 3 D8 : (2,4) ; (1,2)(3,4)
8 4 Q8 : (1,3,2,4)(5,7,6,8) ; (1,5,2,6)(3,8,4,7)
8 5 C2xC2xC2 : (1,2) ; (3,4) ; (5,6)
)");
  const CensusResult r = run_census(c, 1);
  REQUIRE(r.per_delta.size() == 1);
  std::vector<std::string> names;
  for (const auto& row : r.per_delta.at(1)) names.push_back(row.name);
  CHECK(names == std::vector<std::string>{"C3", "C4", "S3", "D8"});
  CHECK(r.completeness.at(1) == Completeness::complete);
  CHECK(r.elementary_abelian.size() == 4);
  CHECK(verify_bound(r).empty());

  const std::string text = emit_report(r, ReportFormat::text);
  CHECK(text ==
        "Four groups with difference 0 (elementary abelian 2-groups)\n"
        "C1 = [ 1, 1 ]\nC2 = [ 2, 1 ]\nC2 x C2 = [ 4, 2 ]\nC2 x C2 x C2 = [ 8, 5 ]\n"
        "\nFour groups with difference 1\n"
        "C3 = [ 3, 1 ]\nC4 = [ 4, 1 ]\nS3 = [ 6, 1 ]\nD8 = [ 8, 3 ]\n");

  // Delta 2 needs order 16, which this catalog lacks.
  const CensusResult r2 = run_census(c, 2);
  CHECK(r2.completeness.at(2) == Completeness::partial);
  CHECK(emit_report(r2, ReportFormat::text).find("with difference 2 (partial)") !=
        std::string::npos);
}

TEST_CASE("structured report carries the same rows") {
  const CensusResult r = run_census(bundled_desk_catalog(), 3);
  const auto doc = nlohmann::json::parse(emit_report(r, ReportFormat::structured));
  CHECK(doc["delta_max"] == 3);
  REQUIRE(doc["buckets"].size() == 3);
  CHECK(doc["buckets"][2]["delta"] == 3);
  CHECK(doc["buckets"][2]["count"] == 3);
  CHECK(doc["buckets"][2]["completeness"] == "complete");
  CHECK(doc["buckets"][2]["groups"][1]["name"] == "Q8");
  CHECK(doc["buckets"][2]["groups"][1]["report"]["i2"] == 2);
  CHECK(doc["elementary_abelian"].size() == 5);
}

TEST_CASE("census rejects delta_max 0") {
  CHECK_THROWS_AS(run_census(bundled_desk_catalog(), 0), std::invalid_argument);
}

TEST_CASE("verify_bound flags misfiled and oversized rows") {
  CensusResult r = run_census(bundled_desk_catalog(), 2);
  REQUIRE(verify_bound(r).empty());
  // Move Q8 (Delta 3) into the Delta 1 bucket.
  CensusRow q8 = r.per_delta.at(1).front();
  q8.group = build(dicyclic(8)).with_id({8, 4});
  q8.name = "Q8";
  r.per_delta.at(1).push_back(q8);
  CHECK(verify_bound(r).size() == 1);
}

TEST_CASE("generator-count identity holds on constructed groups") {
  for (const auto& s : {sl23(), gl23(), symmetric(5), dicyclic(24), abelian({2, 4, 8})}) {
    CHECK(verify_star_identity(build(s)).empty());
  }
}

TEST_CASE("Miller bound over the desk catalog") {
  CHECK(verify_miller(bundled_desk_catalog()).empty());
}
