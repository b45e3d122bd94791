#include "cyclicdef/invariants.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>
#include <string>

#include "cyclicdef/errors.hpp"

namespace cyclicdef {

std::uint64_t euler_phi(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("euler_phi: d must be positive");
  std::uint64_t result = d;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    while (d % p == 0) d /= p;
    result -= result / p;
  }
  if (d > 1) result -= result / d;
  return result;
}

OrderCensus::OrderCensus(std::map<std::uint64_t, std::uint64_t> counts)
    : counts_(std::move(counts)) {}

std::uint64_t OrderCensus::elements_of_order(std::uint64_t d) const {
  auto it = counts_.find(d);
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t OrderCensus::total() const {
  std::uint64_t sum = 0;
  for (const auto& [d, e] : counts_) sum += e;
  return sum;
}

std::uint64_t OrderCensus::cyclic_subgroups_of_order(std::uint64_t d) const {
  const std::uint64_t e = elements_of_order(d);
  const std::uint64_t phi = euler_phi(d);
  if (e % phi != 0) {
    throw InconsistentGroup(std::to_string(e) + " elements of order " + std::to_string(d) +
                            " is not a multiple of phi(d) = " + std::to_string(phi));
  }
  return e / phi;
}

std::uint64_t OrderCensus::cyclic_subgroup_count() const {
  std::uint64_t sum = 0;
  for (const auto& [d, e] : counts_) sum += cyclic_subgroups_of_order(d);
  return sum;
}

std::uint64_t OrderCensus::weighted_generator_count() const {
  std::uint64_t sum = 0;
  for (const auto& [d, e] : counts_) sum += cyclic_subgroups_of_order(d) * euler_phi(d);
  return sum;
}

std::uint64_t OrderCensus::surplus_generator_count() const {
  std::uint64_t sum = 0;
  for (const auto& [d, e] : counts_) sum += cyclic_subgroups_of_order(d) * (euler_phi(d) - 1);
  return sum;
}

OrderCensus order_census(const Group& g) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const auto& e : g.elements()) ++counts[element_order(e)];
  return OrderCensus(std::move(counts));
}

std::uint64_t cyclic_subgroup_count(const Group& g) {
  return order_census(g).cyclic_subgroup_count();
}

namespace {

std::uint64_t checked_delta(const OrderCensus& census) {
  const std::uint64_t order = census.total();
  const std::uint64_t cyclic = census.cyclic_subgroup_count();
  const std::uint64_t surplus = census.surplus_generator_count();
  if (cyclic > order || order - cyclic != surplus) {
    throw InconsistentGroup("|G| - |C(G)| = " + std::to_string(order - cyclic) +
                            " but sum n_d(phi(d)-1) = " + std::to_string(surplus));
  }
  return surplus;
}

}  // namespace

std::uint64_t delta(const Group& g) { return checked_delta(order_census(g)); }

std::uint64_t distinct_cyclic_subgroups(const Group& g) {
  std::set<std::vector<std::size_t>> subgroups;
  for (const auto& x : g.elements()) {
    std::vector<std::size_t> members;
    Permutation power = x;
    while (true) {
      members.push_back(*g.index_of(power));
      if (power.is_identity()) break;
      power = compose(power, x);
    }
    std::sort(members.begin(), members.end());
    subgroups.insert(std::move(members));
  }
  return subgroups.size();
}

std::uint64_t i2(const Group& g) {
  std::uint64_t count = 0;
  for (const auto& e : g.elements()) {
    if (element_order(e) <= 2) ++count;
  }
  return count;
}

DeltaReport delta_report(const OrderCensus& census) {
  DeltaReport r;
  r.group_order = census.total();
  r.delta = checked_delta(census);
  r.cyclic_count = r.group_order - r.delta;
  r.i2 = census.elements_of_order(1) + census.elements_of_order(2);
  r.bound_ok = r.delta == 0 || r.group_order <= 8 * r.delta;
  r.equality_case = r.delta > 0 && r.group_order == 8 * r.delta;
  return r;
}

DeltaReport delta_report(const Group& g) { return delta_report(order_census(g)); }

}  // namespace cyclicdef
