#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cyclicdef/group.hpp"

namespace cyclicdef {

// Catalog files are line oriented, UTF-8, LF terminated:
//
//   # free text                        comment
//   # indexing: gap-smallgroups        indices follow GAP's SmallGroups
//   !complete 1-40 48                  orders listed exhaustively
//   8 3 D8 : (2,4) ; (1,2)(3,4)        order index name : gen ; gen ...
//
// Generators use 1-based cycle notation, "()" for the identity; an entry's
// degree is the largest point among its generators.
struct CatalogEntry {
  std::uint32_t order = 0;
  std::uint32_t index = 0;
  std::string name;
  std::vector<Permutation> generators;
  // Closure of the generators, carrying name and (order, index).
  Group group;

  GroupId id() const { return {order, index}; }
};

// Validates and closes one entry; throws CatalogError on an order mismatch.
CatalogEntry make_entry(std::uint32_t order, std::uint32_t index, std::string name,
                        std::vector<Permutation> generators,
                        std::size_t cap = kDefaultClosureCap);

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::set<std::uint32_t> complete_orders;
  // Set by the "# indexing: gap-smallgroups" header comment.
  bool gap_indexing = false;

  bool is_complete_through(std::uint32_t order) const;
  std::vector<const CatalogEntry*> entries_of_order(std::uint32_t order) const;
  const CatalogEntry* find(GroupId id) const;
};

// Parse or I/O failure with a 1-based line and column (0 when unknown).
class CatalogError : public std::runtime_error {
 public:
  CatalogError(const std::string& message, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ParseOptions {
  std::size_t closure_cap = kDefaultClosureCap;
};

Catalog parse_catalog(std::istream& in, const ParseOptions& options = {});
Catalog parse_catalog(std::string_view text, const ParseOptions& options = {});
Catalog load_catalog(const std::filesystem::path& path, const ParseOptions& options = {});

// Canonical text form; parse_catalog(write_catalog(c)) writes back to the
// same bytes.
std::string write_catalog(const Catalog& catalog);

struct Diagnostic {
  enum class Kind { order_mismatch, duplicate_id, duplicate_class, missing_class, extra_class };
  Kind kind;
  std::optional<GroupId> id;
  std::string message;
};

std::string to_string(Diagnostic::Kind kind);

// Re-closes every entry and checks its order, checks (order, index)
// uniqueness, checks entries of each complete order are pairwise
// non-isomorphic, and for complete orders the brute-force oracle covers,
// compares the class count with the oracle's.
std::vector<Diagnostic> validate_catalog(const Catalog& catalog,
                                         std::size_t cap = kDefaultClosureCap);

// Every group of order 1..40 with GAP SmallGroups indices, compiled into the
// library.
const Catalog& bundled_desk_catalog();
std::string_view bundled_desk_catalog_text();

// Renders a compact catalog name in display form: "(C4xC2):C2" becomes
// "(C4 x C2) : C2".
std::string display_name(std::string_view name);

}  // namespace cyclicdef
