#pragma once

#include <vector>

#include "minram/perm_group.hpp"

namespace minram {

// Every subgroup of G, sorted by (order, element list). Exhaustive reference
// enumeration; requires degree <= 16 and |G| <= 720.
std::vector<PermGroup> all_subgroups(const PermGroup& G);

// One representative per G-conjugacy class of subgroups, sorted by
// (order, element list). Complete single-element-extension search over class
// representatives: candidates are restricted to canonical generators of
// prime-power order and to one representative per N_G(K)-conjugation orbit,
// none of which loses a class. Requires degree <= 16 and |G| <= 5040.
std::vector<PermGroup> subgroup_class_reps(const PermGroup& G);

}  // namespace minram
