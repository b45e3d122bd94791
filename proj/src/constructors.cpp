#include "cyclicdef/constructors.hpp"

#include <array>
#include <numeric>
#include <string>

#include "cyclicdef/errors.hpp"

namespace cyclicdef {

GroupSpec cyclic(std::uint32_t n) { return {spec::Cyclic{n}}; }
GroupSpec abelian(std::vector<std::uint32_t> factors) {
  return {spec::Abelian{std::move(factors)}};
}
GroupSpec dihedral(std::uint32_t order) { return {spec::Dihedral{order}}; }
GroupSpec dicyclic(std::uint32_t order) { return {spec::Dicyclic{order}}; }
GroupSpec symmetric(std::uint32_t n) { return {spec::Symmetric{n}}; }
GroupSpec alternating(std::uint32_t n) { return {spec::Alternating{n}}; }
GroupSpec sl23() { return {spec::SL23{}}; }
GroupSpec gl23() { return {spec::GL23{}}; }
GroupSpec direct_product(std::vector<GroupSpec> factors) {
  return {spec::DirectProduct{std::move(factors)}};
}
GroupSpec semidirect(GroupSpec normal, GroupSpec acting, spec::Action action) {
  return {spec::Semidirect{std::make_shared<const GroupSpec>(std::move(normal)),
                           std::make_shared<const GroupSpec>(std::move(acting)),
                           std::move(action)}};
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::string wrap_if(const std::string& name, std::string_view operators) {
  return name.find_first_of(operators) == std::string::npos ? name : "(" + name + ")";
}

Permutation cycle_on(std::size_t degree, std::vector<std::size_t> points) {
  return Permutation::from_cycles(degree, {std::move(points)});
}

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> out(to - from);
  std::iota(out.begin(), out.end(), from);
  return out;
}

Group build_cyclic(std::uint32_t n, std::size_t cap) {
  if (n == 0) throw InvalidSpec("cyclic group order must be positive");
  if (n == 1) {
    std::array gens{Permutation::identity(1)};
    return Group::closure(gens, cap);
  }
  std::array gens{cycle_on(n, range(0, n))};
  return Group::closure(gens, cap);
}

Group build_dihedral(std::uint32_t order, std::size_t cap) {
  if (order < 2 || order % 2 != 0) throw InvalidSpec("dihedral order must be even and >= 2");
  const std::size_t n = order / 2;
  if (n == 1) return build_cyclic(2, cap);
  if (n == 2) {
    // The square's two axes; the 2-gon action is not faithful.
    std::array gens{cycle_on(4, {0, 1}), cycle_on(4, {2, 3})};
    return Group::closure(gens, cap);
  }
  std::vector<Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<Point>((n - i) % n);
  std::array gens{cycle_on(n, range(0, n)), Permutation::from_images(std::move(reflection))};
  return Group::closure(gens, cap);
}

Group build_dicyclic(std::uint32_t order, std::size_t cap) {
  if (order < 8 || order % 4 != 0) throw InvalidSpec("dicyclic order must be 4n with n >= 2");
  // Left-regular action on a^k x^e, stored at index k + m*e.
  const std::size_t m = order / 2;
  const std::size_t n = order / 4;
  std::vector<Point> a(order), x(order);
  for (std::size_t k = 0; k < m; ++k) {
    a[k] = static_cast<Point>((k + 1) % m);
    a[k + m] = static_cast<Point>((k + 1) % m + m);
    x[k] = static_cast<Point>((m - k) % m + m);      // x a^k = a^-k x
    x[k + m] = static_cast<Point>((n + m - k) % m);  // x a^k x = a^(n-k)
  }
  std::array gens{Permutation::from_images(std::move(a)), Permutation::from_images(std::move(x))};
  return Group::closure(gens, cap);
}

Group build_symmetric(std::uint32_t n, std::size_t cap) {
  if (n == 0) throw InvalidSpec("symmetric group degree must be positive");
  if (n == 1) return build_cyclic(1, cap);
  if (n == 2) return build_cyclic(2, cap);
  std::array gens{cycle_on(n, range(0, n)), cycle_on(n, {0, 1})};
  return Group::closure(gens, cap);
}

Group build_alternating(std::uint32_t n, std::size_t cap) {
  if (n == 0) throw InvalidSpec("alternating group degree must be positive");
  if (n < 3) return build_cyclic(1, cap);
  std::vector<Permutation> gens;
  for (std::size_t k = 2; k < n; ++k) gens.push_back(cycle_on(n, {0, 1, k}));
  return Group::closure(gens, cap);
}

// 2x2 matrices over F3 acting on the eight nonzero column vectors.
Group build_linear_f3(bool general, std::size_t cap) {
  using Matrix = std::array<int, 4>;  // row-major
  std::vector<std::array<int, 2>> vectors;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      if (x || y) vectors.push_back({x, y});
    }
  }
  auto to_permutation = [&](const Matrix& mat) {
    std::vector<Point> images(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      const auto& v = vectors[i];
      std::array<int, 2> w{(mat[0] * v[0] + mat[1] * v[1]) % 3,
                           (mat[2] * v[0] + mat[3] * v[1]) % 3};
      for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j] == w) images[i] = static_cast<Point>(j);
      }
    }
    return Permutation::from_images(std::move(images));
  };
  std::vector<Permutation> gens{to_permutation({1, 1, 0, 1}), to_permutation({1, 0, 1, 1})};
  if (general) gens.push_back(to_permutation({2, 0, 0, 1}));
  return Group::closure(gens, cap);
}

std::uint32_t table_power(const MultiplicationTable& t, std::uint32_t x, std::int64_t e) {
  std::int64_t order = 1;
  for (std::uint32_t y = x; y != t.identity(); y = t.at(y, x)) ++order;
  e %= order;
  if (e < 0) e += order;
  std::uint32_t result = t.identity();
  for (std::int64_t i = 0; i < e; ++i) result = t.at(result, x);
  return result;
}

Group build_semidirect(const spec::Semidirect& sd, std::size_t cap);

Group build_impl(const GroupSpec& s, std::size_t cap) {
  return std::visit(
      Overloaded{
          [&](const spec::Cyclic& c) { return build_cyclic(c.n, cap); },
          [&](const spec::Abelian& a) {
            if (a.factors.empty()) throw InvalidSpec("abelian group needs at least one factor");
            std::vector<Group> parts;
            for (auto n : a.factors) parts.push_back(build_cyclic(n, cap));
            return direct_product(std::span<const Group>(parts), cap);
          },
          [&](const spec::Dihedral& d) { return build_dihedral(d.order, cap); },
          [&](const spec::Dicyclic& d) { return build_dicyclic(d.order, cap); },
          [&](const spec::Symmetric& sym) { return build_symmetric(sym.n, cap); },
          [&](const spec::Alternating& alt) { return build_alternating(alt.n, cap); },
          [&](const spec::SL23&) { return build_linear_f3(false, cap); },
          [&](const spec::GL23&) { return build_linear_f3(true, cap); },
          [&](const spec::DirectProduct& dp) {
            if (dp.factors.empty()) throw InvalidSpec("direct product needs factors");
            std::vector<Group> parts;
            for (const auto& f : dp.factors) parts.push_back(build_impl(f, cap));
            return direct_product(std::span<const Group>(parts), cap);
          },
          [&](const spec::Semidirect& sd) { return build_semidirect(sd, cap); },
      },
      s.kind);
}

Group build_semidirect(const spec::Semidirect& sd, std::size_t cap) {
  if (!sd.normal || !sd.acting) throw InvalidSpec("semidirect product needs both parts");
  const Group normal = build_impl(*sd.normal, cap);
  const Group acting = build_impl(*sd.acting, cap);
  const std::size_t n_order = normal.order();
  const std::size_t h_order = acting.order();
  if (n_order * h_order > cap) throw ClosureCapExceeded(cap);
  if (n_order * h_order > 65535) throw InvalidSpec("semidirect product too large");

  const MultiplicationTable tn(normal);
  const MultiplicationTable th(acting);
  std::vector<std::uint32_t> n_gens, h_gens;
  for (const auto& g : normal.generators()) n_gens.push_back(*normal.index_of(g));
  for (const auto& g : acting.generators()) h_gens.push_back(*acting.index_of(g));

  // Images of the normal generators under each acting generator.
  std::vector<std::vector<std::uint32_t>> gen_images(h_gens.size());
  std::visit(
      Overloaded{
          [&](const spec::PowerAction& pa) {
            if (pa.exponents.size() != h_gens.size()) {
              throw InvalidSpec("power action needs one exponent per acting generator (" +
                                std::to_string(h_gens.size()) + ")");
            }
            for (std::size_t j = 0; j < h_gens.size(); ++j) {
              for (auto g : n_gens) gen_images[j].push_back(table_power(tn, g, pa.exponents[j]));
            }
          },
          [&](const spec::ImageAction& ia) {
            if (ia.images.size() != h_gens.size()) {
              throw InvalidSpec("image action needs one entry per acting generator (" +
                                std::to_string(h_gens.size()) + ")");
            }
            for (std::size_t j = 0; j < h_gens.size(); ++j) {
              if (ia.images[j].size() != n_gens.size()) {
                throw InvalidSpec("image action needs one image per normal generator (" +
                                  std::to_string(n_gens.size()) + ")");
              }
              for (const auto& exps : ia.images[j]) {
                if (exps.size() != n_gens.size()) {
                  throw InvalidSpec("image exponent vector has wrong length");
                }
                std::uint32_t img = tn.identity();
                for (std::size_t i = 0; i < exps.size(); ++i) {
                  img = tn.at(img, table_power(tn, n_gens[i], exps[i]));
                }
                gen_images[j].push_back(img);
              }
            }
          },
      },
      sd.action);

  // Extend each generator assignment to a map on N, checking that it is a
  // well-defined bijective homomorphism.
  std::vector<std::vector<std::uint32_t>> automorphisms;
  constexpr std::uint32_t kUnset = ~0u;
  for (std::size_t j = 0; j < h_gens.size(); ++j) {
    std::vector<std::uint32_t> phi(n_order, kUnset);
    std::vector<bool> hit(n_order, false);
    std::vector<std::uint32_t> queue{tn.identity()};
    phi[tn.identity()] = tn.identity();
    hit[tn.identity()] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t x = queue[head];
      for (std::size_t i = 0; i < n_gens.size(); ++i) {
        const std::uint32_t y = tn.at(x, n_gens[i]);
        const std::uint32_t v = tn.at(phi[x], gen_images[j][i]);
        if (phi[y] == kUnset) {
          if (hit[v]) throw InvalidSpec("action is not injective on the normal subgroup");
          phi[y] = v;
          hit[v] = true;
          queue.push_back(y);
        } else if (phi[y] != v) {
          throw InvalidSpec("action does not respect the normal subgroup's relations");
        }
      }
    }
    automorphisms.push_back(std::move(phi));
  }

  // h -> phi_h extends to a homomorphism H -> Aut(N) iff the pairs
  // (h_j, phi_j) generate a subgroup of H x Sym(N) of order |H|.
  std::vector<Permutation> pairs;
  for (std::size_t j = 0; j < h_gens.size(); ++j) {
    std::vector<Point> images(h_order + n_order);
    for (std::size_t k = 0; k < h_order; ++k) images[k] = static_cast<Point>(th.at(h_gens[j], k));
    for (std::size_t m = 0; m < n_order; ++m) {
      images[h_order + m] = static_cast<Point>(h_order + automorphisms[j][m]);
    }
    pairs.push_back(Permutation::from_images(std::move(images)));
  }
  std::optional<Group> diagonal;
  try {
    diagonal = Group::closure(pairs, h_order);
  } catch (const ClosureCapExceeded&) {
    throw InvalidSpec("action does not define a homomorphism into Aut(normal)");
  }
  std::vector<std::vector<std::uint32_t>> theta(h_order);
  for (const auto& p : diagonal->elements()) {
    auto& t = theta[p(static_cast<Point>(th.identity()))];
    t.resize(n_order);
    for (std::size_t m = 0; m < n_order; ++m) {
      t[m] = p(static_cast<Point>(h_order + m)) - static_cast<std::uint32_t>(h_order);
    }
  }

  // Left-regular action of N:H on pairs (m, k) stored at m*|H| + k, using
  // (n1, h1)(n2, h2) = (n1 theta_h1(n2), h1 h2).
  const std::size_t degree = n_order * h_order;
  std::vector<Permutation> gens;
  for (auto g : n_gens) {
    std::vector<Point> images(degree);
    for (std::size_t m = 0; m < n_order; ++m) {
      for (std::size_t k = 0; k < h_order; ++k) {
        images[m * h_order + k] = static_cast<Point>(tn.at(g, m) * h_order + k);
      }
    }
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  for (auto h : h_gens) {
    std::vector<Point> images(degree);
    for (std::size_t m = 0; m < n_order; ++m) {
      for (std::size_t k = 0; k < h_order; ++k) {
        images[m * h_order + k] = static_cast<Point>(theta[h][m] * h_order + th.at(h, k));
      }
    }
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  return Group::closure(gens, cap);
}

}  // namespace

std::string spec_name(const GroupSpec& s) {
  return std::visit(
      Overloaded{
          [](const spec::Cyclic& c) { return "C" + std::to_string(c.n); },
          [](const spec::Abelian& a) {
            std::string out;
            for (std::size_t i = 0; i < a.factors.size(); ++i) {
              if (i) out += 'x';
              out += "C" + std::to_string(a.factors[i]);
            }
            return out;
          },
          [](const spec::Dihedral& d) -> std::string {
            if (d.order == 2) return "C2";
            if (d.order == 6) return "S3";
            if (d.order == 4) return "C2xC2";
            return "D" + std::to_string(d.order);
          },
          [](const spec::Dicyclic& d) {
            return (is_power_of_two(d.order) ? "Q" : "Dic") + std::to_string(d.order);
          },
          [](const spec::Symmetric& sym) { return "S" + std::to_string(sym.n); },
          [](const spec::Alternating& alt) { return "A" + std::to_string(alt.n); },
          [](const spec::SL23&) { return std::string("SL(2,3)"); },
          [](const spec::GL23&) { return std::string("GL(2,3)"); },
          [](const spec::DirectProduct& dp) {
            std::string out;
            for (std::size_t i = 0; i < dp.factors.size(); ++i) {
              if (i) out += 'x';
              out += wrap_if(spec_name(dp.factors[i]), ":.");
            }
            return out;
          },
          [](const spec::Semidirect& sd) {
            return wrap_if(spec_name(*sd.normal), "x:.") + ":" + wrap_if(spec_name(*sd.acting), "x:.");
          },
      },
      s.kind);
}

Group build(const GroupSpec& s, std::size_t cap) {
  return build_impl(s, cap).with_name(spec_name(s));
}

Group build_d8_c2k(std::uint32_t k, std::size_t cap) {
  if (k == 0) return build(dihedral(8), cap);
  if (k > 20 || (std::size_t{8} << k) > cap) throw ClosureCapExceeded(cap);
  return build(direct_product({abelian(std::vector<std::uint32_t>(k, 2)), dihedral(8)}), cap);
}

std::vector<SuiteEntry> small_delta_suite() {
  using spec::ImageAction;
  using spec::PowerAction;
  // (C4xC2):C2 with a -> ab, b -> b, and with a -> a, b -> a^2 b.
  const auto c4c2_a = semidirect(abelian({4, 2}), cyclic(2), ImageAction{{{{1, 1}, {0, 1}}}});
  const auto c4c2_b = semidirect(abelian({4, 2}), cyclic(2), ImageAction{{{{1, 0}, {2, 1}}}});

  const std::vector<std::pair<GroupSpec, std::uint64_t>> specs{
      {cyclic(3), 1},
      {cyclic(4), 1},
      {symmetric(3), 1},
      {dihedral(8), 1},
      {cyclic(6), 2},
      {abelian({4, 2}), 2},
      {dihedral(12), 2},
      {direct_product({cyclic(2), dihedral(8)}), 2},
      {cyclic(5), 3},
      {dicyclic(8), 3},
      {dihedral(10), 3},
      {cyclic(8), 4},
      {abelian({3, 3}), 4},
      {alternating(4), 4},
      {abelian({6, 2}), 4},
      {c4c2_a, 4},
      {dihedral(16), 4},
      {abelian({4, 2, 2}), 4},
      {c4c2_b, 4},
      {semidirect(abelian({3, 3}), cyclic(2), PowerAction{{-1}}), 4},
      {direct_product({abelian({2, 2}), symmetric(3)}), 4},
      {direct_product({abelian({2, 2}), dihedral(8)}), 4},
      {cyclic(7), 5},
      {semidirect(cyclic(3), cyclic(4), PowerAction{{-1}}), 5},
      {dihedral(14), 5},
  };
  std::vector<SuiteEntry> out;
  for (const auto& [s, d] : specs) out.push_back({build(s), d});
  return out;
}

}  // namespace cyclicdef
