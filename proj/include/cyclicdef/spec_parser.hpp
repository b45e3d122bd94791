#pragma once

#include <string_view>

#include "cyclicdef/constructors.hpp"

namespace cyclicdef {

// Parses a constructor expression:
//
//   expr   := term ('x' term)*                direct product
//   term   := power (':' power action)?       semidirect product
//   power  := atom ('^' int)?                 direct power
//   atom   := '(' expr ')' | Cn | Dn | Qn | Dicn | Sn | An | SL(2,3) | GL(2,3)
//   action := '@' int (',' int)*              x -> x^k per acting generator
//           | '@[' images ('|' images)* ']'   one block per acting generator
//   images := row (';' row)*                  one row per normal generator,
//   row    := int (',' int)*                  exponents over normal generators
//
// Dn and Qn take the group order (D8, Q8); Qn with n not a power of two is
// the dicyclic group, also spelled Dicn. Examples: "C3:C4@-1",
// "(C4xC2):C2@[1,1;0,1]", "C2^2xD8". Throws InvalidSpec naming the offset.
GroupSpec parse_group_spec(std::string_view text);

}  // namespace cyclicdef
