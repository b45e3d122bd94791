#pragma once

#include <cstdint>
#include <map>

#include "cyclicdef/group.hpp"

namespace cyclicdef {

// Number of integers in 1..d coprime to d; d must be positive.
std::uint64_t euler_phi(std::uint64_t d);

// e_d = number of elements of order d. Each cyclic subgroup of order d has
// exactly phi(d) generators, so n_d = e_d / phi(d).
class OrderCensus {
 public:
  OrderCensus() = default;
  explicit OrderCensus(std::map<std::uint64_t, std::uint64_t> counts);

  const std::map<std::uint64_t, std::uint64_t>& counts() const { return counts_; }
  std::uint64_t elements_of_order(std::uint64_t d) const;
  std::uint64_t total() const;
  // n_d; throws InconsistentGroup when phi(d) does not divide e_d.
  std::uint64_t cyclic_subgroups_of_order(std::uint64_t d) const;
  // Sum of n_d.
  std::uint64_t cyclic_subgroup_count() const;
  // Sum of n_d * phi(d); equals total() for every group.
  std::uint64_t weighted_generator_count() const;
  // Sum of n_d * (phi(d) - 1), the second route to Delta.
  std::uint64_t surplus_generator_count() const;

  friend bool operator==(const OrderCensus&, const OrderCensus&) = default;

 private:
  std::map<std::uint64_t, std::uint64_t> counts_;
};

OrderCensus order_census(const Group& g);

std::uint64_t cyclic_subgroup_count(const Group& g);

// |G| - |C(G)|. Also evaluates the sum of n_d(phi(d)-1) and throws
// InconsistentGroup if the two disagree.
std::uint64_t delta(const Group& g);

// |C(G)| counted directly as the number of distinct element sets <g>,
// without going through phi.
std::uint64_t distinct_cyclic_subgroups(const Group& g);

// Elements of order 1 or 2.
std::uint64_t i2(const Group& g);

struct DeltaReport {
  std::uint64_t group_order = 0;
  std::uint64_t cyclic_count = 0;
  std::uint64_t delta = 0;
  std::uint64_t i2 = 0;
  // delta > 0 implies |G| <= 8*delta; vacuously true for delta == 0.
  bool bound_ok = true;
  // delta > 0 and |G| == 8*delta.
  bool equality_case = false;

  friend bool operator==(const DeltaReport&, const DeltaReport&) = default;
};

DeltaReport delta_report(const Group& g);
DeltaReport delta_report(const OrderCensus& census);

}  // namespace cyclicdef
