#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclicdef/catalog.hpp"
#include "cyclicdef/invariants.hpp"

namespace cyclicdef {

enum class Completeness { complete, partial };

std::string to_string(Completeness c);

struct CensusRow {
  GroupId id;
  std::string name;
  DeltaReport report;
  Group group;
};

struct CensusResult {
  std::uint64_t delta_max = 0;
  // delta -> rows sorted by (order, index); only 1 <= delta <= delta_max.
  std::map<std::uint64_t, std::vector<CensusRow>> per_delta;
  // A bucket is complete when the catalog lists every group of order <= 8*delta.
  std::map<std::uint64_t, Completeness> completeness;
  // Delta = 0 (elementary abelian 2-groups) among the scanned groups.
  std::vector<CensusRow> elementary_abelian;
};

// Computes a DeltaReport for every catalog group of order <= 8*delta_max and
// buckets the ones with 1 <= Delta <= delta_max. Throws std::invalid_argument
// when delta_max is 0.
CensusResult run_census(const Catalog& catalog, std::uint64_t delta_max);

struct Violation {
  std::optional<GroupId> id;
  std::string name;
  std::string message;
};

// Checks, for each bucketed row, that the group really has Delta equal to its
// bucket, that |G| <= 8*Delta, and that every |G| = 8*Delta case is
// isomorphic to D8 x C2^k with Delta = 2^k.
std::vector<Violation> verify_bound(const CensusResult& result);

// i2(G) <= 3|G|/4 for every catalog group that is not elementary abelian of
// exponent 2, with equality only for D8 x C2^k.
std::vector<Violation> verify_miller(const Catalog& catalog);

// sum n_d phi(d) = |G| and sum n_d (phi(d) - 1) = |G| - |C(G)|, evaluated
// from the order census and from the cyclic subgroup count separately.
std::vector<Violation> verify_star_identity(const Group& g);
std::vector<Violation> verify_star_identity(const Catalog& catalog);

enum class ReportFormat { text, structured };

// text: per-delta sections "Four groups with difference 1" followed by
// "NAME = [ order, index ]" lines; partial buckets are marked "(partial)".
// structured: JSON carrying the same content.
std::string emit_report(const CensusResult& result, ReportFormat format);

// "Four", "Twenty-one", ...; for 0 <= n < 1000.
std::string count_word(std::uint64_t n);

}  // namespace cyclicdef
