#include "doctest.h"

#include "brute.hpp"
#include "cyclicdef/constructors.hpp"
#include "cyclicdef/errors.hpp"
#include "cyclicdef/invariants.hpp"

using namespace cyclicdef;

TEST_CASE("euler_phi") {
  for (std::uint64_t n = 1; n <= 200; ++n) CHECK(euler_phi(n) == brute::phi(n));
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(1) == 1);
}

TEST_CASE("D8 order census") {
  const Group d8 = build(dihedral(8));
  const OrderCensus c = order_census(d8);
  CHECK(c.counts() == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 5}, {4, 2}});
  CHECK(c.total() == 8);
  CHECK(c.cyclic_subgroups_of_order(4) == 1);
  CHECK(c.cyclic_subgroups_of_order(2) == 5);
  CHECK(c.cyclic_subgroups_of_order(3) == 0);
  CHECK(c.cyclic_subgroup_count() == 7);
  CHECK(c.weighted_generator_count() == 8);
  CHECK(c.surplus_generator_count() == 1);
  CHECK(delta(d8) == 1);
  CHECK(i2(d8) == 6);
}

TEST_CASE("delta matches naive subgroup collection") {
  for (const auto& s : {cyclic(12), dihedral(12), dicyclic(8), symmetric(4), alternating(4),
                        abelian({4, 2}), dicyclic(12), sl23()}) {
    const Group g = build(s);
    CAPTURE(g.name());
    const std::uint64_t naive = brute::cyclic_subgroups(g);
    CHECK(cyclic_subgroup_count(g) == naive);
    CHECK(distinct_cyclic_subgroups(g) == naive);
    CHECK(delta(g) == g.order() - naive);
  }
}

TEST_CASE("cyclic group delta is n minus number of divisors") {
  for (std::uint32_t n = 1; n <= 30; ++n) {
    std::uint64_t divisors = 0;
    for (std::uint32_t d = 1; d <= n; ++d) divisors += n % d == 0;
    CHECK(delta(build(cyclic(n))) == n - divisors);
  }
}

TEST_CASE("inconsistent census is detected") {
  // Three elements of order 3 cannot be split into pairs of generators.
  const OrderCensus bad({{1, 1}, {3, 3}});
  CHECK_THROWS_AS(bad.cyclic_subgroups_of_order(3), InconsistentGroup);
  CHECK_THROWS_AS(bad.cyclic_subgroup_count(), InconsistentGroup);
}

TEST_CASE("delta report") {
  const DeltaReport r = delta_report(build(dihedral(8)));
  CHECK(r.group_order == 8);
  CHECK(r.cyclic_count == 7);
  CHECK(r.delta == 1);
  CHECK(r.i2 == 6);
  CHECK(r.bound_ok);
  CHECK(r.equality_case);

  const DeltaReport q = delta_report(build(dicyclic(8)));
  CHECK(q.delta == 3);
  CHECK(q.bound_ok);
  CHECK_FALSE(q.equality_case);

  const DeltaReport e = delta_report(build(abelian({2, 2, 2})));
  CHECK(e.delta == 0);
  CHECK(e.bound_ok);
  CHECK_FALSE(e.equality_case);

  CHECK(delta_report(order_census(build(sl23()))) == delta_report(build(sl23())));
}
