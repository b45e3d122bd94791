#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cyclicdef {

using Point = std::uint16_t;

// A bijection on the points 0..degree-1. Text forms (cycle notation) are
// 1-based; everything in the C++ API is 0-based.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);
  // Throws std::invalid_argument unless `images` is a bijection on 0..n-1.
  static Permutation from_images(std::vector<Point> images);
  // Cycles are 0-based point lists; a point may appear in at most one cycle.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  // Same action on 0..degree()-1, fixing the extra points.
  Permutation extended(std::size_t degree) const;
  // Nontrivial cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}
  std::vector<Point> images_;
};

// (a ∘ b)(p) = a(b(p)): the right factor acts first. This is the group
// product everywhere in the library, so g*h means compose(g, h).
Permutation compose(const Permutation& a, const Permutation& b);

// Least k >= 1 with g^k = id, computed as the lcm of the cycle lengths.
std::uint64_t element_order(const Permutation& g);

// 1-based cycle notation, "()" for the identity.
std::string to_cycle_string(const Permutation& g);

// Parses juxtaposed 1-based cycles such as "(1,2)(3,4,5)" or "()" into
// 0-based cycles. Cycles need not be disjoint. Throws CycleSyntaxError with a
// column offset on bad input.
std::vector<std::vector<std::size_t>> parse_cycles(std::string_view text);

// Product of the parsed cycles, rightmost acting first (so "(1,2)(1,3)" sends
// 1 to 3). Degree defaults to the largest point mentioned.
Permutation parse_permutation(std::string_view text, std::size_t degree = 0);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace cyclicdef
