#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "cyclicdef/group.hpp"

namespace cyclicdef {

// Cheap isomorphism invariants. Different fingerprints prove two groups
// non-isomorphic; equal ones prove nothing.
struct Fingerprint {
  std::uint64_t order = 0;
  std::vector<std::uint64_t> order_spectrum;  // sorted element orders
  bool abelian = false;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  std::uint64_t exponent = 0;

  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Group& g);

// Precomputed data for repeated isomorphism tests against the same group.
class IsoProfile {
 public:
  explicit IsoProfile(const Group& g);

  const Fingerprint& fingerprint() const { return fingerprint_; }
  const MultiplicationTable& table() const { return table_; }
  // Per-element class used to restrict candidate images: (order,
  // centralizer size, number of square roots).
  const std::vector<std::uint64_t>& element_class() const { return element_class_; }
  // Sorted element classes; equal for isomorphic groups.
  const std::vector<std::uint64_t>& class_multiset() const { return class_multiset_; }

 private:
  MultiplicationTable table_;
  Fingerprint fingerprint_;
  std::vector<std::uint64_t> element_class_;
  std::vector<std::uint64_t> class_multiset_;
};

// Backtracking search for a multiplication-preserving bijection, assigning
// images to a greedily chosen generating set of `a`.
bool is_isomorphic(const IsoProfile& a, const IsoProfile& b);
bool is_isomorphic(const Group& a, const Group& b);

// First representative of each isomorphism class, in input order.
std::vector<Group> dedupe(const std::vector<Group>& groups);

// For each input group, the position in the dedupe() output of its class.
std::vector<std::size_t> classify(const std::vector<Group>& groups);

}  // namespace cyclicdef
