#include "cyclicdef/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "cyclicdef/errors.hpp"

namespace cyclicdef {

Permutation Permutation::identity(std::size_t degree) {
  if (degree > std::numeric_limits<Point>::max()) {
    throw std::invalid_argument("permutation degree too large");
  }
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p]) {
      throw std::invalid_argument("image table is not a bijection");
    }
    seen[p] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  Permutation result = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t p : cycle) {
      if (p >= degree) throw std::invalid_argument("cycle point exceeds degree");
      if (used[p]) throw std::invalid_argument("point repeated across cycles");
      used[p] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      result.images_[cycle[i]] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
    }
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size()) throw std::invalid_argument("cannot shrink a permutation");
  Permutation result = identity(degree);
  std::copy(images_.begin(), images_.end(), result.images_.begin());
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point p = static_cast<Point>(start); !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("compose: degree mismatch (" + std::to_string(a.degree()) +
                                " vs " + std::to_string(b.degree()) + ")");
  }
  std::vector<Point> images(a.degree());
  for (std::size_t p = 0; p < images.size(); ++p) images[p] = a(b(static_cast<Point>(p)));
  return Permutation::from_images(std::move(images));
}

std::uint64_t element_order(const Permutation& g) {
  std::uint64_t order = 1;
  for (const auto& cycle : g.cycles()) order = std::lcm(order, cycle.size());
  return order;
}

std::string to_cycle_string(const Permutation& g) {
  auto cycles = g.cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out;
}

std::vector<std::vector<std::size_t>> parse_cycles(std::string_view text) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& msg) -> void { throw CycleSyntaxError(msg, i); };

  skip_space();
  if (i == text.size()) fail("expected a cycle");
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    skip_space();
    std::vector<std::size_t> cycle;
    if (i < text.size() && text[i] == ')') {
      // "()" is the identity; it may only stand alone.
      ++i;
      skip_space();
      if (!cycles.empty() || i != text.size()) fail("'()' must be the whole generator");
      return cycles;
    }
    while (true) {
      skip_space();
      std::size_t start = i;
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > std::numeric_limits<Point>::max()) fail("point out of range");
        ++i;
      }
      if (i == start) fail("expected a point number");
      if (value == 0) {
        i = start;
        fail("points are numbered from 1");
      }
      if (std::find(cycle.begin(), cycle.end(), value - 1) != cycle.end()) {
        i = start;
        fail("duplicate point " + std::to_string(value) + " in cycle");
      }
      cycle.push_back(value - 1);
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      fail("expected ',' or ')'");
    }
    if (cycle.size() < 2) fail("a cycle needs at least two points");
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  return cycles;
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  auto cycles = parse_cycles(text);
  std::size_t needed = 1;
  for (const auto& c : cycles) {
    for (std::size_t p : c) needed = std::max(needed, p + 1);
  }
  if (degree == 0) degree = needed;
  if (degree < needed) throw std::invalid_argument("cycle point exceeds degree");
  // Juxtaposed cycles multiply; the rightmost acts first, as in compose().
  Permutation result = Permutation::identity(degree);
  for (const auto& cycle : cycles) {
    result = compose(result, Permutation::from_cycles(degree, {cycle}));
  }
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image table.
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace cyclicdef
