#include "cyclicdef/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace cyclicdef::oracle {
namespace {

constexpr std::uint8_t kEmpty = 0xff;

// Every group of order n has an element a of some maximal order m, and a
// labelling in which a^p x_b is b*m + p for right coset representatives x_b
// (x_0 the identity). In that labelling rows 0..m-1 are fixed, and row
// b*m + p is row b*m followed by left multiplication by a^p, so only the
// coset representative rows are searched. Every element must have order at
// most m.
class TableSearch {
 public:
  TableSearch(std::size_t n, std::size_t m)
      : n_(n), m_(m), cells_(n * n, kEmpty), row_used_(n), col_used_(n) {
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t y = 0; y < n; ++y) set(k, y, shift(static_cast<std::uint8_t>(y), k));
    }
    for (std::size_t i = m; i < n; ++i) set(i, 0, static_cast<std::uint8_t>(i));
  }

  void run(std::set<CayleyTable>& found) {
    found_ = &found;
    fill(1, 1);
  }

 private:
  std::uint8_t at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

  // a^k * x for the label x.
  std::uint8_t shift(std::uint8_t x, std::size_t k) const {
    const std::size_t block = x / m_ * m_;
    return static_cast<std::uint8_t>(block + (x - block + k) % m_);
  }

  void set(std::size_t i, std::size_t j, std::uint8_t v) {
    cells_[i * n_ + j] = v;
    row_used_[i] |= 1u << v;
    col_used_[j] |= 1u << v;
  }

  void unset(std::size_t i, std::size_t j) {
    const std::uint8_t v = at(i, j);
    cells_[i * n_ + j] = kEmpty;
    row_used_[i] &= ~(1u << v);
    col_used_[j] &= ~(1u << v);
  }

  bool equal_if_defined(std::uint8_t lhs, std::uint8_t rhs) const {
    return lhs == kEmpty || rhs == kEmpty || lhs == rhs;
  }

  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
    return (a == kEmpty || b == kEmpty) ? kEmpty : at(a, b);
  }

  // Checks every triple (x y) z = x (y z) in which cell (i, j) takes part
  // and all four products are known.
  bool associative_at(std::size_t i, std::size_t j) const {
    const std::uint8_t k = at(i, j);
    for (std::size_t z = 0; z < n_; ++z) {
      // (i j) z = i (j z)
      if (!equal_if_defined(mul(k, z), mul(i, at(j, z)))) return false;
    }
    for (std::size_t x = 0; x < n_; ++x) {
      // (x i) j = x (i j)
      if (!equal_if_defined(mul(at(x, i), j), mul(x, k))) return false;
    }
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        // (x y) j with x y = i
        if (at(x, y) == i && !equal_if_defined(k, mul(x, at(y, j)))) return false;
        // i (y z') with y z' = j: here x plays the role of y and y of z'
        if (at(x, y) == j && !equal_if_defined(k, mul(at(i, x), y))) return false;
      }
    }
    return true;
  }

  std::size_t row_order(std::size_t i) const {
    std::size_t k = 1;
    for (std::uint8_t y = static_cast<std::uint8_t>(i); y != 0; y = at(i, y)) ++k;
    return k;
  }

  // Fills cell (b*m, j) and the m - 1 cells it determines.
  void fill(std::size_t b, std::size_t j) {
    const std::size_t r = b * m_;
    if (r == n_) {
      CayleyTable t{n_, cells_};
      if (is_group_table(t)) found_->insert(canonical_form(t));
      return;
    }
    if (j == n_) {
      for (std::size_t p = 0; p < m_; ++p) {
        if (row_order(r + p) > m_) return;
      }
      fill(b + 1, 1);
      return;
    }
    for (std::uint8_t v = 0; v < n_; ++v) {
      bool free = true;
      for (std::size_t p = 0; p < m_ && free; ++p) {
        const std::uint8_t w = shift(v, p);
        free = !((row_used_[r + p] | col_used_[j]) & (1u << w));
      }
      if (!free) continue;
      for (std::size_t p = 0; p < m_; ++p) set(r + p, j, shift(v, p));
      bool ok = true;
      for (std::size_t p = 0; p < m_ && ok; ++p) ok = associative_at(r + p, j);
      if (ok) fill(b, j + 1);
      for (std::size_t p = 0; p < m_; ++p) unset(r + p, j);
    }
  }

  std::size_t n_;
  std::size_t m_;
  std::vector<std::uint8_t> cells_;
  std::vector<unsigned> row_used_;
  std::vector<unsigned> col_used_;
  std::set<CayleyTable>* found_ = nullptr;
};

std::vector<std::uint8_t> subgroup_of(const CayleyTable& t, const std::vector<std::uint8_t>& gens) {
  std::vector<bool> seen(t.n, false);
  std::vector<std::uint8_t> out{0};
  seen[0] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (auto g : gens) {
      const std::uint8_t y = t.at(out[head], g);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace

bool is_group_table(const CayleyTable& t) {
  const std::size_t n = t.n;
  if (n == 0 || t.cells.size() != n * n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (t.at(0, i) != i || t.at(i, 0) != i) return false;
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (t.at(i, j) >= n || t.at(j, i) >= n || row[t.at(i, j)] || col[t.at(j, i)]) return false;
      row[t.at(i, j)] = true;
      col[t.at(j, i)] = true;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z))) return false;
      }
    }
  }
  return true;
}

CayleyTable canonical_form(const CayleyTable& t) {
  const std::size_t n = t.n;
  if (n == 1) return t;

  // Minimum generating-tuple length, by increasing tuple size.
  std::vector<std::vector<std::uint8_t>> tuples{{}};
  std::vector<std::vector<std::uint8_t>> generating;
  while (generating.empty()) {
    std::vector<std::vector<std::uint8_t>> longer;
    for (const auto& tuple : tuples) {
      for (std::uint8_t g = 1; g < n; ++g) {
        auto next = tuple;
        next.push_back(g);
        if (subgroup_of(t, next).size() == n) {
          generating.push_back(next);
        }
        longer.push_back(std::move(next));
      }
    }
    tuples = std::move(longer);
  }

  CayleyTable best;
  for (const auto& gens : generating) {
    // Breadth-first labelling: identity first, then products in discovery order.
    const auto order = subgroup_of(t, gens);
    std::vector<std::uint8_t> label(n);
    for (std::size_t i = 0; i < n; ++i) label[order[i]] = static_cast<std::uint8_t>(i);
    CayleyTable relabelled{n, std::vector<std::uint8_t>(n * n)};
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        relabelled.cells[a * n + b] = label[t.at(order[a], order[b])];
      }
    }
    if (best.n == 0 || relabelled < best) best = std::move(relabelled);
  }
  return best;
}

std::vector<CayleyTable> enumerate_tables(std::size_t n) {
  if (n < 1 || n > kMaxOrder) {
    throw std::out_of_range("oracle supports orders 1.." + std::to_string(kMaxOrder) + ", got " +
                            std::to_string(n));
  }
  std::set<CayleyTable> found;
  if (n == 1) {
    found.insert(CayleyTable{1, {0}});
  } else {
    for (std::size_t m = 2; m <= n; ++m) {
      if (n % m == 0) TableSearch(n, m).run(found);
    }
  }
  return {found.begin(), found.end()};
}

std::vector<Group> enumerate_order(std::size_t n) {
  std::vector<Group> out;
  for (const auto& t : enumerate_tables(n)) {
    std::vector<std::uint32_t> cells(t.cells.begin(), t.cells.end());
    out.push_back(MultiplicationTable(n, std::move(cells)).regular_representation());
  }
  return out;
}

}  // namespace cyclicdef::oracle
