#pragma once

#include <string>
#include <vector>

#include "minram/bms.hpp"
#include "minram/graphs.hpp"
#include "minram/group_spec.hpp"

namespace minram {

// Composite-field recipe: a graph with the requested automorphism group, a
// prime triple whose stem field supplies the roots, and the adjoined
// radicals beta_ij with beta_ij^r = (alpha_i - alpha_j)^2. The automorphism
// group of the composite field itself is not verified; the record carries
// the component certificates only.
struct FruchtRecipe {
  std::string group_name;
  SimpleGraph graph;
  std::vector<int> generators;  // element labels used for the Cayley graph
  bool padded = false;          // trivial group upgraded to a rigid graph
  int n = 0;                    // vertex count, also the stem degree
  BmsTriple triple;             // found with the inertia requirement on
  std::string field_declaration;
};

struct FruchtParams {
  BmsParams bms;           // n is overwritten with the graph vertex count
  int graph_budget = 256;  // automorphism verification cap
};

// Builds the graph, re-verifies Aut(graph) against G by brute force, then
// searches for a prime triple at n = |V| with transposition inertia at r.
// The trivial group's one-vertex graph is padded to a fixed 6-vertex rigid
// graph, the smallest with trivial automorphism group.
FruchtRecipe frucht_field_recipe(const GroupSpec& spec, const FruchtParams& params = {});

}  // namespace minram
