#pragma once

#include <cstdint>
#include <vector>

#include "cyclicdef/group.hpp"

namespace cyclicdef::oracle {

// Largest order the exhaustive search supports. The number of labelled
// tables grows like (n-1)!, so this is a hard limit.
inline constexpr std::size_t kMaxOrder = 10;

// n x n table over 0..n-1 with element 0 the identity.
struct CayleyTable {
  std::size_t n = 0;
  std::vector<std::uint8_t> cells;

  std::uint8_t at(std::size_t i, std::size_t j) const { return cells[i * n + j]; }
  friend auto operator<=>(const CayleyTable&, const CayleyTable&) = default;
};

// Latin square with identity row/column 0 and associativity on all triples.
bool is_group_table(const CayleyTable& t);

// Canonical relabelling fixing the identity: the lexicographically least
// table over the breadth-first labellings induced by every generating tuple
// of minimum length. Isomorphic tables have equal canonical forms.
CayleyTable canonical_form(const CayleyTable& t);

// Every group table of order n up to isomorphism, by backtracking over the
// coset-representative rows of a labelling built around an element of
// maximal order, with Latin-square and partial-associativity pruning. Sorted
// by canonical table. Throws std::out_of_range unless 1 <= n <= kMaxOrder.
std::vector<CayleyTable> enumerate_tables(std::size_t n);

// enumerate_tables(n) as regular permutation representations.
std::vector<Group> enumerate_order(std::size_t n);

}  // namespace cyclicdef::oracle
