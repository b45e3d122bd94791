#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cyclicdef/group.hpp"

namespace cyclicdef {

struct GroupSpec;

namespace spec {

struct Cyclic {
  std::uint32_t n = 1;
};
// C_{n1} x ... x C_{nk}, generators in factor order.
struct Abelian {
  std::vector<std::uint32_t> factors;
};
// D_order: order/2 rotations and as many reflections. Generators: rotation,
// reflection.
struct Dihedral {
  std::uint32_t order = 2;
};
// <a, x | a^(order/2) = 1, x^2 = a^(order/4), x a x^-1 = a^-1>; Q8 is
// Dicyclic{8}. Generators: a, x.
struct Dicyclic {
  std::uint32_t order = 8;
};
struct Symmetric {
  std::uint32_t n = 1;
};
struct Alternating {
  std::uint32_t n = 1;
};
struct SL23 {};
struct GL23 {};

struct DirectProduct {
  std::vector<GroupSpec> factors;
};

// Every acting generator j raises every normal generator to exponents[j].
// Only an automorphism when the normal part is abelian.
struct PowerAction {
  std::vector<std::int64_t> exponents;
};
// images[j][i] is the image of normal generator i under acting generator j,
// written as exponents e over the normal generators g_1..g_k, meaning the
// ordered product g_1^e_1 * ... * g_k^e_k.
struct ImageAction {
  std::vector<std::vector<std::vector<std::int64_t>>> images;
};
using Action = std::variant<PowerAction, ImageAction>;

// normal : acting, with the acting part's generators mapped to
// automorphisms of the normal part.
struct Semidirect {
  std::shared_ptr<const GroupSpec> normal;
  std::shared_ptr<const GroupSpec> acting;
  Action action;
};

}  // namespace spec

struct GroupSpec {
  using Kind = std::variant<spec::Cyclic, spec::Abelian, spec::Dihedral, spec::Dicyclic,
                            spec::Symmetric, spec::Alternating, spec::SL23, spec::GL23,
                            spec::DirectProduct, spec::Semidirect>;
  Kind kind;
};

GroupSpec cyclic(std::uint32_t n);
GroupSpec abelian(std::vector<std::uint32_t> factors);
GroupSpec dihedral(std::uint32_t order);
GroupSpec dicyclic(std::uint32_t order);
GroupSpec symmetric(std::uint32_t n);
GroupSpec alternating(std::uint32_t n);
GroupSpec sl23();
GroupSpec gl23();
GroupSpec direct_product(std::vector<GroupSpec> factors);
GroupSpec semidirect(GroupSpec normal, GroupSpec acting, spec::Action action);

// Display name in the compact catalog style, e.g. "C2xD8", "(C4xC2):C2".
std::string spec_name(const GroupSpec& s);

// Realizes the spec as a permutation group named by spec_name(). Throws
// InvalidSpec for bad parameters or an action that is not a homomorphism
// into Aut(normal), ClosureCapExceeded when the result is too large.
Group build(const GroupSpec& s, std::size_t cap = kDefaultClosureCap);

// D8 x C2^k, order 2^(k+3), Delta = 2^k.
Group build_d8_c2k(std::uint32_t k, std::size_t cap = kDefaultClosureCap);

struct SuiteEntry {
  Group group;
  std::uint64_t expected_delta;
};

// The 25 groups with Delta in 1..5, each paired with its Delta.
std::vector<SuiteEntry> small_delta_suite();

}  // namespace cyclicdef
