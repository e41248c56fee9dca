#include "minram/frucht_recipe.hpp"

#include "minram/errors.hpp"

namespace minram {

namespace {

// Triangle with pendant paths of lengths 1 and 2: the smallest graph with
// trivial automorphism group and more than one vertex.
SimpleGraph rigid_padding() {
  SimpleGraph g;
  g.n = 6;
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 4);
  g.add_edge(4, 5);
  return g;
}

}  // namespace

FruchtRecipe frucht_field_recipe(const GroupSpec& spec, const FruchtParams& params) {
  FruchtRecipe out;
  out.group_name = spec.source;
  out.generators = default_generating_set(spec.group);
  out.graph = frucht_graph(spec.group, out.generators);
  if (out.graph.n < 2) {
    out.graph = rigid_padding();
    out.padded = true;
  }
  out.n = out.graph.n;

  PermGroup aut = graph_automorphisms(out.graph, params.graph_budget);
  if (!AbstractGroup::from_perm_group(aut).is_isomorphic_to(spec.group))
    throw verification_error("graph automorphism group does not match " + spec.source);

  BmsParams bounds = params.bms;
  bounds.n = out.n;
  bounds.require_inertia = true;
  out.triple = bms_search(bounds);

  out.field_declaration =
      "K = Q(alpha_1, ..., alpha_" + std::to_string(out.n) +
      ", beta_ij for i < j) where the alpha_i are the roots of the stem "
      "polynomial and beta_ij^" + out.triple.r.get_str() +
      " = (alpha_i - alpha_j)^2; the composite automorphism group is not "
      "verified here";
  return out;
}

}  // namespace minram
