#include "cyclicdef/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cyclicdef {
namespace {

std::vector<std::uint64_t> table_orders(const MultiplicationTable& t) {
  std::vector<std::uint64_t> orders(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) {
    std::uint64_t k = 1;
    for (std::uint32_t y = static_cast<std::uint32_t>(x); y != t.identity(); y = t.at(y, x)) ++k;
    orders[x] = k;
  }
  return orders;
}

Fingerprint compute_fingerprint(const MultiplicationTable& t) {
  const std::size_t n = t.size();
  Fingerprint f;
  f.order = n;
  f.order_spectrum = table_orders(t);
  f.exponent = std::accumulate(f.order_spectrum.begin(), f.order_spectrum.end(), std::uint64_t{1},
                               [](std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); });
  std::sort(f.order_spectrum.begin(), f.order_spectrum.end());

  for (std::size_t x = 0; x < n; ++x) {
    bool central = true;
    for (std::size_t y = 0; y < n && central; ++y) central = t.at(x, y) == t.at(y, x);
    if (central) ++f.center_order;
  }
  f.abelian = f.center_order == n;

  std::vector<std::uint32_t> commutators;
  std::vector<bool> seen(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      // x^-1 y^-1 x y
      const std::uint32_t c = t.at(t.at(t.inverse(x), t.inverse(y)), t.at(x, y));
      if (!seen[c]) {
        seen[c] = true;
        commutators.push_back(c);
      }
    }
  }
  f.derived_order = t.generated_subgroup(commutators).size();
  return f;
}

struct Search {
  const MultiplicationTable& ta;
  const MultiplicationTable& tb;
  const std::vector<std::uint64_t>& class_a;
  const std::vector<std::uint64_t>& class_b;
  std::vector<std::uint32_t> gens;                     // generators of a
  std::vector<std::vector<std::uint32_t>> candidates;  // per generator, in b
  std::vector<std::uint32_t> images;

  static constexpr std::uint32_t kUnset = ~0u;

  // Extends gens[0..depth] -> images over the generated subgroup of a and
  // checks it stays a well-defined injective homomorphism.
  bool consistent(std::size_t depth, std::vector<std::uint32_t>& phi) const {
    const std::size_t n = ta.size();
    phi.assign(n, kUnset);
    std::vector<bool> hit(n, false);
    std::vector<std::uint32_t> queue{ta.identity()};
    phi[ta.identity()] = tb.identity();
    hit[tb.identity()] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t x = queue[head];
      for (std::size_t i = 0; i <= depth; ++i) {
        const std::uint32_t y = ta.at(x, gens[i]);
        const std::uint32_t v = tb.at(phi[x], images[i]);
        if (phi[y] == kUnset) {
          if (hit[v]) return false;
          phi[y] = v;
          hit[v] = true;
          queue.push_back(y);
        } else if (phi[y] != v) {
          return false;
        }
      }
    }
    return true;
  }

  bool run(std::size_t depth) {
    if (depth == gens.size()) return true;
    std::vector<std::uint32_t> phi;
    for (std::uint32_t c : candidates[depth]) {
      images[depth] = c;
      if (consistent(depth, phi) && run(depth + 1)) return true;
    }
    return false;
  }
};

}  // namespace

Fingerprint fingerprint(const Group& g) { return compute_fingerprint(MultiplicationTable(g)); }

IsoProfile::IsoProfile(const Group& g)
    : table_(g), fingerprint_(compute_fingerprint(table_)) {
  const std::size_t n = table_.size();
  const auto orders = table_orders(table_);
  std::vector<std::uint64_t> centralizer(n, 0), roots(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    ++roots[table_.at(x, x)];
    for (std::size_t y = 0; y < n; ++y) {
      if (table_.at(x, y) == table_.at(y, x)) ++centralizer[x];
    }
  }
  element_class_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    // Pack the three small counts; orders and counts are < 2^20 in scope.
    element_class_[x] = (orders[x] << 40) | (centralizer[x] << 20) | roots[x];
  }
  class_multiset_ = element_class_;
  std::sort(class_multiset_.begin(), class_multiset_.end());
}

bool is_isomorphic(const IsoProfile& a, const IsoProfile& b) {
  if (a.fingerprint() != b.fingerprint()) return false;
  if (a.class_multiset() != b.class_multiset()) return false;

  const auto& ta = a.table();
  const auto& tb = b.table();
  const std::size_t n = ta.size();

  std::map<std::uint64_t, std::vector<std::uint32_t>> b_by_class;
  for (std::size_t y = 0; y < n; ++y) {
    b_by_class[b.element_class()[y]].push_back(static_cast<std::uint32_t>(y));
  }

  // Greedy generating set of a: repeatedly take the element outside the
  // current subgroup whose class is rarest in b.
  Search search{ta, tb, a.element_class(), b.element_class(), {}, {}, {}};
  std::vector<bool> covered(n, false);
  covered[ta.identity()] = true;
  std::size_t covered_count = 1;
  while (covered_count < n) {
    std::uint32_t best = 0;
    std::size_t best_size = ~std::size_t{0};
    for (std::size_t x = 0; x < n; ++x) {
      if (covered[x]) continue;
      const std::size_t size = b_by_class[a.element_class()[x]].size();
      if (size < best_size) {
        best_size = size;
        best = static_cast<std::uint32_t>(x);
      }
    }
    search.gens.push_back(best);
    search.candidates.push_back(b_by_class[a.element_class()[best]]);
    covered.assign(n, false);
    const auto sub = ta.generated_subgroup(search.gens);
    for (auto x : sub) covered[x] = true;
    covered_count = sub.size();
  }
  search.images.assign(search.gens.size(), 0);
  return search.run(0);
}

bool is_isomorphic(const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;
  return is_isomorphic(IsoProfile(a), IsoProfile(b));
}

std::vector<std::size_t> classify(const std::vector<Group>& groups) {
  std::vector<std::size_t> out(groups.size());
  struct Rep {
    std::size_t class_index;
    IsoProfile profile;
  };
  std::map<std::pair<Fingerprint, std::vector<std::uint64_t>>, std::vector<Rep>> buckets;
  std::size_t classes = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    IsoProfile profile(groups[i]);
    auto& bucket = buckets[{profile.fingerprint(), profile.class_multiset()}];
    auto match = std::find_if(bucket.begin(), bucket.end(), [&](const Rep& r) {
      return is_isomorphic(profile, r.profile);
    });
    if (match != bucket.end()) {
      out[i] = match->class_index;
    } else {
      out[i] = classes;
      bucket.push_back({classes++, std::move(profile)});
    }
  }
  return out;
}

std::vector<Group> dedupe(const std::vector<Group>& groups) {
  const auto classes = classify(groups);
  std::vector<Group> out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (classes[i] == out.size()) out.push_back(groups[i]);
  }
  return out;
}

}  // namespace cyclicdef
