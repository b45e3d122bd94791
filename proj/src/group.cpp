#include "cyclicdef/group.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>

#include "cyclicdef/errors.hpp"

namespace cyclicdef {

struct Group::Data {
  std::vector<Permutation> elements;
  std::vector<Permutation> generators;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
};

Group::Group() {
  static const std::shared_ptr<const Data> trivial = [] {
    std::array gens{Permutation::identity(1)};
    return closure(gens).data_;
  }();
  data_ = trivial;
}

std::size_t Group::order() const { return data_->elements.size(); }
std::size_t Group::degree() const { return data_->elements.front().degree(); }
std::span<const Permutation> Group::elements() const { return data_->elements; }
std::span<const Permutation> Group::generators() const { return data_->generators; }

std::string to_string(const GroupId& id) {
  return "[ " + std::to_string(id.order) + ", " + std::to_string(id.index) + " ]";
}

Group Group::closure(std::span<const Permutation> gens, std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
  const std::size_t degree = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("generators differ in degree");
  }

  auto data = std::make_shared<Data>();
  data->generators.assign(gens.begin(), gens.end());
  auto add = [&](Permutation p) {
    if (data->elements.size() >= cap) throw ClosureCapExceeded(cap);
    data->index.emplace(p, data->elements.size());
    data->elements.push_back(std::move(p));
  };

  add(Permutation::identity(degree));
  std::size_t level_begin = 0;
  while (level_begin < data->elements.size()) {
    const std::size_t level_end = data->elements.size();
    std::vector<Permutation> next;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const auto& g : gens) {
        Permutation p = compose(data->elements[i], g);
        if (!data->index.contains(p)) next.push_back(std::move(p));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (auto& p : next) add(std::move(p));
    level_begin = level_end;
  }
  return Group(std::move(data));
}

std::optional<std::size_t> Group::index_of(const Permutation& g) const {
  auto it = data_->index.find(g);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

Group Group::with_name(std::string name) const {
  Group copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Group Group::with_id(GroupId id) const {
  if (id.order != order()) {
    throw std::invalid_argument("group id order " + std::to_string(id.order) +
                                " does not match group order " + std::to_string(order()));
  }
  Group copy = *this;
  copy.id_ = id;
  return copy;
}

Group Group::conjugated_by(const Permutation& r) const {
  const Permutation r_inv = r.inverse();
  std::vector<Permutation> gens;
  for (const auto& g : generators()) gens.push_back(compose(compose(r, g), r_inv));
  Group out = closure(gens, order());
  out.name_ = name_;
  out.id_ = id_;
  return out;
}

MultiplicationTable::MultiplicationTable(const Group& g) : n_(g.order()) {
  auto elements = g.elements();
  cells_.resize(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      auto k = g.index_of(compose(elements[i], elements[j]));
      if (!k) throw InconsistentGroup("element set is not closed under composition");
      cells_[i * n_ + j] = static_cast<std::uint32_t>(*k);
    }
  }
  identity_ = 0;
  compute_inverses();
}

MultiplicationTable::MultiplicationTable(std::size_t n, std::vector<std::uint32_t> cells)
    : n_(n), cells_(std::move(cells)) {
  if (n_ == 0 || cells_.size() != n_ * n_) throw std::invalid_argument("bad table shape");
  bool found = false;
  for (std::size_t e = 0; e < n_ && !found; ++e) {
    bool is_identity = true;
    for (std::size_t x = 0; x < n_ && is_identity; ++x) {
      is_identity = at(e, x) == x && at(x, e) == x;
    }
    if (is_identity) {
      identity_ = static_cast<std::uint32_t>(e);
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("table has no identity");
  compute_inverses();
}

void MultiplicationTable::compute_inverses() {
  inverses_.assign(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (at(i, j) == identity_) {
        inverses_[i] = static_cast<std::uint32_t>(j);
        break;
      }
    }
  }
}

std::vector<std::uint32_t> MultiplicationTable::generated_subgroup(
    std::span<const std::uint32_t> gens) const {
  std::vector<bool> seen(n_, false);
  std::vector<std::uint32_t> out{identity_};
  seen[identity_] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::uint32_t g : gens) {
      std::uint32_t y = at(out[head], g);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

Group MultiplicationTable::regular_representation() const {
  std::vector<Permutation> gens;
  gens.reserve(n_);
  for (std::size_t g = 0; g < n_; ++g) {
    std::vector<Point> images(n_);
    for (std::size_t x = 0; x < n_; ++x) images[x] = static_cast<Point>(at(g, x));
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  return Group::closure(gens, n_);
}

Group direct_product(std::span<const Group> factors, std::size_t cap) {
  if (factors.empty()) throw std::invalid_argument("direct product of no factors");
  std::size_t degree = 0;
  for (const auto& f : factors) degree += f.degree();
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.generators()) {
      std::vector<Point> images(degree);
      for (std::size_t p = 0; p < degree; ++p) images[p] = static_cast<Point>(p);
      for (std::size_t p = 0; p < g.degree(); ++p) {
        images[offset + p] = static_cast<Point>(offset + g(static_cast<Point>(p)));
      }
      gens.push_back(Permutation::from_images(std::move(images)));
    }
    offset += f.degree();
  }
  return Group::closure(gens, cap);
}

bool is_elementary_abelian_2(const Group& g) {
  for (const auto& e : g.elements()) {
    if (element_order(e) > 2) return false;
  }
  return true;
}

}  // namespace cyclicdef
