// Test-side reference computations. Deliberately naive and independent of
// the library's counting code: everything is done on raw image vectors.
#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cyclicdef/group.hpp"

namespace brute {

using Images = std::vector<cyclicdef::Point>;

inline Images images_of(const cyclicdef::Permutation& p) {
  return Images(p.images().begin(), p.images().end());
}

inline Images mul(const Images& a, const Images& b) {
  Images out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

inline Images ident(std::size_t n) {
  Images out(n);
  std::iota(out.begin(), out.end(), cyclicdef::Point{0});
  return out;
}

// The set {g, g^2, ..., id}.
inline std::set<Images> powers(const Images& g) {
  std::set<Images> out;
  Images x = g;
  while (out.insert(x).second) x = mul(x, g);
  return out;
}

inline std::uint64_t order_of(const Images& g) { return powers(g).size(); }

// Number of distinct cyclic subgroups, by collecting every <g>.
inline std::uint64_t cyclic_subgroups(const cyclicdef::Group& g) {
  std::set<std::set<Images>> subgroups;
  for (const auto& e : g.elements()) subgroups.insert(powers(images_of(e)));
  return subgroups.size();
}

inline std::map<std::uint64_t, std::uint64_t> order_counts(const cyclicdef::Group& g) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& e : g.elements()) ++out[order_of(images_of(e))];
  return out;
}

// Closure by repeated right multiplication until nothing new appears.
inline std::set<Images> closure(const std::vector<Images>& gens) {
  std::set<Images> seen{ident(gens.front().size())};
  std::vector<Images> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& x : frontier) {
      for (const auto& s : gens) {
        Images y = mul(x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline std::uint64_t phi(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

}  // namespace brute
