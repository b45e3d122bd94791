#include "doctest.h"

#include <algorithm>

#include "cyclicdef/catalog.hpp"

using namespace cyclicdef;

namespace {

constexpr const char* kSmall = R"(# test catalog
# indexing: gap-smallgroups
!complete 1-4, 6
1 1 C1 : ()
2 1 C2 : (1,2)
3 1 C3 : (1,2,3)
4 1 C4 : (1,2,3,4)
4 2 C2xC2 : (1,2) ; (3,4)
6 1 S3 : (1,2,3) ; (1,2)
6 2 C6 : (1,2,3)(4,5)
)";

std::pair<std::size_t, std::size_t> error_position(const std::string& text) {
  try {
    parse_catalog(text);
  } catch (const CatalogError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

bool has_kind(const std::vector<Diagnostic>& ds, Diagnostic::Kind kind) {
  return std::any_of(ds.begin(), ds.end(), [&](const Diagnostic& d) { return d.kind == kind; });
}

}  // namespace

TEST_CASE("parse a small catalog") {
  const Catalog c = parse_catalog(kSmall);
  CHECK(c.gap_indexing);
  CHECK(c.entries.size() == 7);
  CHECK(c.complete_orders == std::set<std::uint32_t>{1, 2, 3, 4, 6});
  CHECK(c.is_complete_through(4));
  CHECK_FALSE(c.is_complete_through(6));
  CHECK(c.entries_of_order(4).size() == 2);
  const CatalogEntry* s3 = c.find({6, 1});
  REQUIRE(s3 != nullptr);
  CHECK(s3->name == "S3");
  CHECK(s3->group.order() == 6);
  CHECK(s3->group.id() == GroupId{6, 1});
  CHECK(c.find({5, 1}) == nullptr);
  CHECK(validate_catalog(c).empty());
}

TEST_CASE("carriage returns and blank lines") {
  const Catalog c = parse_catalog("\r\n2 1 C2 : (1,2)\r\n\r\n   \n3 1 C3 : (1,2,3)\r\n");
  CHECK(c.entries.size() == 2);
  CHECK_FALSE(c.gap_indexing);
}

TEST_CASE("parse errors report line and column") {
  CHECK(error_position("2 1 C2 : (1,2)\nx 1 C2 : (1,2)\n") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(error_position("2 1 C2 (1,2)\n") == std::pair<std::size_t, std::size_t>{1, 8});
  CHECK(error_position("3 1 C3 : (1,2,4\n") == std::pair<std::size_t, std::size_t>{1, 16});
  CHECK(error_position("3 1 C3 : (1,2) ; (1,x)\n") == std::pair<std::size_t, std::size_t>{1, 21});
  CHECK(error_position("!complete 1-\n") == std::pair<std::size_t, std::size_t>{1, 13});
  CHECK(error_position("!finished 1\n") == std::pair<std::size_t, std::size_t>{1, 1});
  // Generators close to the wrong order.
  CHECK(error_position("# c\n4 1 C4 : (1,2,3)\n") == std::pair<std::size_t, std::size_t>{2, 1});
  // Duplicate id.
  CHECK(error_position("2 1 C2 : (1,2)\n2 1 C2 : (3,4)\n") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK_THROWS_WITH_AS(parse_catalog("3 1 C3 : (1,2)\n"), doctest::Contains("line 1"),
                       CatalogError);
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(load_catalog("/nonexistent/catalog.txt"), CatalogError);
}

TEST_CASE("write_catalog round trip") {
  const Catalog c = parse_catalog(kSmall);
  const std::string text = write_catalog(c);
  const Catalog back = parse_catalog(text);
  CHECK(write_catalog(back) == text);
  CHECK(back.entries.size() == c.entries.size());
  CHECK(back.complete_orders == c.complete_orders);
  CHECK(back.gap_indexing);
  CHECK(text.find("!complete 1-4 6") != std::string::npos);
}

TEST_CASE("validation finds duplicate and missing classes") {
  const Catalog dup = parse_catalog("!complete 4\n4 1 C4 : (1,2,3,4)\n4 2 C4 : (1,3,2,4)\n");
  const auto d1 = validate_catalog(dup);
  CHECK(has_kind(d1, Diagnostic::Kind::duplicate_class));
  CHECK(has_kind(d1, Diagnostic::Kind::missing_class));

  const Catalog missing = parse_catalog("!complete 8\n8 1 C8 : (1,2,3,4,5,6,7,8)\n");
  CHECK(has_kind(validate_catalog(missing), Diagnostic::Kind::missing_class));

  const Catalog empty_order = parse_catalog("!complete 5\n");
  CHECK(has_kind(validate_catalog(empty_order), Diagnostic::Kind::missing_class));

  // Incomplete orders are not checked for coverage.
  const Catalog partial = parse_catalog("8 1 C8 : (1,2,3,4,5,6,7,8)\n");
  CHECK(validate_catalog(partial).empty());
}

TEST_CASE("bundled desk catalog") {
  const Catalog& c = bundled_desk_catalog();
  CHECK(c.entries.size() == 181);
  CHECK(c.is_complete_through(40));
  CHECK(c.gap_indexing);
  CHECK(c.entries_of_order(32).size() == 51);
  CHECK(c.entries_of_order(24).size() == 15);
  CHECK(c.entries_of_order(16).size() == 14);
  CHECK(c.find({8, 3})->name == "D8");
  CHECK(c.find({16, 11})->name == "C2xD8");
  CHECK(c.find({32, 46})->name == "C2xC2xD8");
  CHECK(bundled_desk_catalog_text().find("!complete 1-40") != std::string_view::npos);
}

TEST_CASE("display names") {
  CHECK(display_name("(C4xC2):C2") == "(C4 x C2) : C2");
  CHECK(display_name("C2xD8") == "C2 x D8");
  CHECK(display_name("C2.((C4xC2):C2)") == "C2 . ((C4 x C2) : C2)");
  CHECK(display_name("SL(2,3)") == "SL(2,3)");
  CHECK(display_name("D8") == "D8");
}
