#pragma once

#include <string>

#include "minram/abstract_group.hpp"

namespace minram {

// Target group parsed from user input. Accepted forms:
//   named:       C6, C_6, D4, S4, A5, Q8, V4 (case-insensitive)
//   generators:  "(1 2 3);(1 2)" — permutations separated by ';', the group
//                they generate (order <= 512)
//   table file:  @path — first line n, then n rows of n 0-based entries
struct GroupSpec {
  AbstractGroup group;
  std::string source;  // normalized description of the parsed form
};

GroupSpec parse_group_spec(const std::string& text);

}  // namespace minram
