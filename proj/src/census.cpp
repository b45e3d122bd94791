#include "cyclicdef/census.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <stdexcept>

#include "json.hpp"

#include "cyclicdef/constructors.hpp"
#include "cyclicdef/isomorphism.hpp"

namespace cyclicdef {

std::string to_string(Completeness c) {
  return c == Completeness::complete ? "complete" : "partial";
}

CensusResult run_census(const Catalog& catalog, std::uint64_t delta_max) {
  if (delta_max == 0) throw std::invalid_argument("delta_max must be at least 1");
  CensusResult result;
  result.delta_max = delta_max;
  for (std::uint64_t d = 1; d <= delta_max; ++d) {
    result.per_delta[d];
    result.completeness[d] = catalog.is_complete_through(static_cast<std::uint32_t>(
                                 std::min<std::uint64_t>(8 * d, 0xffffffffu)))
                                 ? Completeness::complete
                                 : Completeness::partial;
  }
  for (const auto& entry : catalog.entries) {
    if (entry.order > 8 * delta_max) continue;
    CensusRow row{entry.id(), entry.name, delta_report(entry.group), entry.group};
    if (row.report.delta == 0) {
      result.elementary_abelian.push_back(std::move(row));
    } else if (row.report.delta <= delta_max) {
      result.per_delta[row.report.delta].push_back(std::move(row));
    }
  }
  auto by_id = [](const CensusRow& a, const CensusRow& b) { return a.id < b.id; };
  std::sort(result.elementary_abelian.begin(), result.elementary_abelian.end(), by_id);
  for (auto& [d, rows] : result.per_delta) std::sort(rows.begin(), rows.end(), by_id);
  return result;
}

namespace {

// D8 x C2^k for |G| = 8 * 2^k, else nullopt.
std::optional<std::uint32_t> d8_c2k_exponent(std::uint64_t order) {
  if (order < 8 || order % 8 != 0) return std::nullopt;
  std::uint64_t m = order / 8;
  if ((m & (m - 1)) != 0) return std::nullopt;
  std::uint32_t k = 0;
  while (m > 1) {
    m >>= 1;
    ++k;
  }
  return k;
}

class D8C2kFamily {
 public:
  bool contains(const Group& g) {
    auto k = d8_c2k_exponent(g.order());
    if (!k) return false;
    auto it = profiles_.find(*k);
    if (it == profiles_.end()) {
      it = profiles_.emplace(*k, IsoProfile(build_d8_c2k(*k, std::max(g.order(), kDefaultClosureCap))))
               .first;
    }
    return is_isomorphic(IsoProfile(g), it->second);
  }

 private:
  std::map<std::uint32_t, IsoProfile> profiles_;
};

Violation violation(const CensusRow& row, std::string message) {
  return {row.id, row.name, std::move(message)};
}

}  // namespace

std::vector<Violation> verify_bound(const CensusResult& result) {
  std::vector<Violation> out;
  D8C2kFamily family;
  for (const auto& [d, rows] : result.per_delta) {
    for (const auto& row : rows) {
      const std::uint64_t actual = delta(row.group);
      if (actual != d || row.report.delta != d) {
        out.push_back(violation(row, "listed under difference " + std::to_string(d) +
                                         " but Delta = " + std::to_string(actual)));
        continue;
      }
      const std::uint64_t order = row.group.order();
      if (order > 8 * d) {
        out.push_back(violation(row, "order " + std::to_string(order) + " exceeds 8*Delta = " +
                                         std::to_string(8 * d)));
      } else if (order == 8 * d && !family.contains(row.group)) {
        out.push_back(violation(row, "|G| = 8*Delta but G is not D8 x C2^k"));
      }
    }
  }
  for (const auto& row : result.elementary_abelian) {
    if (delta(row.group) != 0 || !is_elementary_abelian_2(row.group)) {
      out.push_back(violation(row, "listed with Delta = 0 but is not elementary abelian"));
    }
  }
  return out;
}

std::vector<Violation> verify_miller(const Catalog& catalog) {
  std::vector<Violation> out;
  D8C2kFamily family;
  for (const auto& e : catalog.entries) {
    if (is_elementary_abelian_2(e.group)) continue;
    const std::uint64_t involutions = i2(e.group);
    const std::uint64_t order = e.group.order();
    if (4 * involutions > 3 * order) {
      out.push_back({e.id(), e.name,
                     "i2 = " + std::to_string(involutions) + " exceeds 3|G|/4"});
    } else if (4 * involutions == 3 * order && !family.contains(e.group)) {
      out.push_back({e.id(), e.name, "i2 = 3|G|/4 but G is not D8 x C2^k"});
    }
  }
  return out;
}

std::vector<Violation> verify_star_identity(const Group& g) {
  std::vector<Violation> out;
  auto fail = [&](std::string msg) { out.push_back({g.id(), g.name(), std::move(msg)}); };
  const OrderCensus census = order_census(g);
  const std::uint64_t order = g.order();
  std::uint64_t weighted = 0, surplus = 0;
  try {
    weighted = census.weighted_generator_count();
    surplus = census.surplus_generator_count();
  } catch (const std::exception& e) {
    fail(e.what());
    return out;
  }
  if (weighted != order) {
    fail("sum n_d phi(d) = " + std::to_string(weighted) + " != |G| = " + std::to_string(order));
  }
  const std::uint64_t cyclic = distinct_cyclic_subgroups(g);
  if (cyclic > order || surplus != order - cyclic) {
    fail("sum n_d (phi(d)-1) = " + std::to_string(surplus) + " != |G| - |C(G)| = " +
         std::to_string(order) + " - " + std::to_string(cyclic));
  }
  return out;
}

std::vector<Violation> verify_star_identity(const Catalog& catalog) {
  std::vector<Violation> out;
  for (const auto& e : catalog.entries) {
    auto v = verify_star_identity(e.group);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::string count_word(std::uint64_t n) {
  static const std::array<const char*, 20> small{
      "zero",    "one",     "two",       "three",    "four",     "five",    "six",
      "seven",   "eight",   "nine",      "ten",      "eleven",   "twelve",  "thirteen",
      "fourteen", "fifteen", "sixteen",  "seventeen", "eighteen", "nineteen"};
  static const std::array<const char*, 10> tens{"",      "",      "twenty",  "thirty", "forty",
                                                "fifty", "sixty", "seventy", "eighty", "ninety"};
  if (n >= 1000) return std::to_string(n);
  std::string out;
  if (n >= 100) {
    out = std::string(small[n / 100]) + " hundred";
    n %= 100;
    if (n == 0) {
      out[0] = static_cast<char>(std::toupper(out[0]));
      return out;
    }
    out += " and ";
  }
  if (n < 20) {
    out += small[n];
  } else {
    out += tens[n / 10];
    if (n % 10) out += std::string("-") + small[n % 10];
  }
  out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

namespace {

std::string heading(std::size_t count, const std::string& tail) {
  return count_word(count) + (count == 1 ? " group" : " groups") + " with difference " + tail;
}

void append_rows(std::string& out, const std::vector<CensusRow>& rows) {
  for (const auto& row : rows) {
    out += display_name(row.name) + " = " + to_string(row.id) + "\n";
  }
}

nlohmann::ordered_json row_json(const CensusRow& row) {
  const auto& r = row.report;
  return {{"name", row.name},
          {"order", row.id.order},
          {"index", row.id.index},
          {"report",
           {{"group_order", r.group_order},
            {"cyclic_count", r.cyclic_count},
            {"delta", r.delta},
            {"i2", r.i2},
            {"bound_ok", r.bound_ok},
            {"equality_case", r.equality_case}}}};
}

}  // namespace

std::string emit_report(const CensusResult& result, ReportFormat format) {
  if (format == ReportFormat::structured) {
    nlohmann::ordered_json doc;
    doc["delta_max"] = result.delta_max;
    auto& elementary = doc["elementary_abelian"] = nlohmann::ordered_json::array();
    for (const auto& row : result.elementary_abelian) elementary.push_back(row_json(row));
    auto& buckets = doc["buckets"] = nlohmann::ordered_json::array();
    for (const auto& [d, rows] : result.per_delta) {
      nlohmann::ordered_json bucket{{"delta", d},
                                    {"completeness", to_string(result.completeness.at(d))},
                                    {"count", rows.size()}};
      auto& groups = bucket["groups"] = nlohmann::ordered_json::array();
      for (const auto& row : rows) groups.push_back(row_json(row));
      buckets.push_back(std::move(bucket));
    }
    return doc.dump(2) + "\n";
  }

  std::string out;
  out += heading(result.elementary_abelian.size(), "0 (elementary abelian 2-groups)") + "\n";
  append_rows(out, result.elementary_abelian);
  for (const auto& [d, rows] : result.per_delta) {
    out += "\n";
    std::string tail = std::to_string(d);
    if (result.completeness.at(d) == Completeness::partial) tail += " (partial)";
    out += heading(rows.size(), tail) + "\n";
    append_rows(out, rows);
  }
  return out;
}

}  // namespace cyclicdef
