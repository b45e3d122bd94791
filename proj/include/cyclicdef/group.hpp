#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclicdef/permutation.hpp"

namespace cyclicdef {

inline constexpr std::size_t kDefaultClosureCap = 10000;

// (order, index) pair in a small-groups catalog.
struct GroupId {
  std::uint32_t order = 0;
  std::uint32_t index = 0;
  friend auto operator<=>(const GroupId&, const GroupId&) = default;
};

std::string to_string(const GroupId& id);  // "[ 8, 3 ]"

// A finite permutation group with its full element list. Immutable; copies
// share the element storage.
class Group {
 public:
  // The trivial group on one point.
  Group();

  // Smallest set closed under composition containing `gens` and the
  // identity. Elements are listed breadth-first over generator words
  // (level k holds products of k generators not seen earlier), each level
  // sorted by image table. Throws std::invalid_argument on an empty list or
  // mixed degrees, ClosureCapExceeded past `cap` elements.
  static Group closure(std::span<const Permutation> gens,
                       std::size_t cap = kDefaultClosureCap);

  std::size_t order() const;
  std::size_t degree() const;
  // elements()[0] is the identity.
  std::span<const Permutation> elements() const;
  std::span<const Permutation> generators() const;
  std::optional<std::size_t> index_of(const Permutation& g) const;

  const std::string& name() const { return name_; }
  const std::optional<GroupId>& id() const { return id_; }
  Group with_name(std::string name) const;
  // Throws std::invalid_argument if id.order != order().
  Group with_id(GroupId id) const;

  // The group generated by r*g*r^-1 for each generator g, keeping the name
  // and id. Models relabelling the points by r.
  Group conjugated_by(const Permutation& r) const;

 private:
  struct Data;
  explicit Group(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
  std::string name_;
  std::optional<GroupId> id_;
};

// Multiplication table over the element indices of a Group:
// at(i, j) is the index of elements[i] * elements[j].
class MultiplicationTable {
 public:
  explicit MultiplicationTable(const Group& g);
  MultiplicationTable(std::size_t n, std::vector<std::uint32_t> cells);

  std::size_t size() const { return n_; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  std::uint32_t inverse(std::size_t i) const { return inverses_[i]; }
  std::uint32_t identity() const { return identity_; }

  // Elements of the subgroup generated by `gens`, identity first, in BFS order.
  std::vector<std::uint32_t> generated_subgroup(std::span<const std::uint32_t> gens) const;

  // Left-regular representation: the group of maps x -> g*x on n points.
  Group regular_representation() const;

 private:
  void compute_inverses();

  std::size_t n_ = 0;
  std::vector<std::uint32_t> cells_;
  std::vector<std::uint32_t> inverses_;
  std::uint32_t identity_ = 0;
};

// Direct product acting on the disjoint union of the factors' points.
Group direct_product(std::span<const Group> factors, std::size_t cap = kDefaultClosureCap);

// True when every element has order 1 or 2 (the groups C2^k).
bool is_elementary_abelian_2(const Group& g);

}  // namespace cyclicdef
