#pragma once

#include <string>
#include <utility>
#include <vector>

#include "minram/abstract_group.hpp"
#include "minram/perm_group.hpp"

namespace minram {

// Undirected simple graph: no loops, no multi-edges, edges kept sorted with
// u < v inside each pair.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  std::vector<std::vector<int>> adjacency() const;  // sorted neighbor lists

  // "n m" on the first line, then one "u v" line per edge, 0-based, sorted.
  std::string serialize() const;
};

// Smallest generating set found by a greedy scan that prefers elements of
// large order (so cyclic factors use one generator and reflections come
// after rotations). Deterministic for a fixed multiplication table.
std::vector<int> default_generating_set(const AbstractGroup& G);

// Cayley graph of G on the given generators with each directed color-k edge
// replaced by an edge gadget: u - a - b - v with pendant paths of length
// 2k+1 at a and 2k+2 at b (the shorter path marks the tail). Involution
// generators use the symmetric variant u - w - v with one pendant path of
// length 2k+1 at w, one gadget per unordered pair. Orders 1 and 2, where
// the gadgets acquire accidental symmetry, use fixed special graphs: K1 and
// the path on 5 vertices.
SimpleGraph frucht_graph(const AbstractGroup& G, const std::vector<int>& generators);
SimpleGraph frucht_graph(const AbstractGroup& G);  // default generating set

// Full automorphism group by color-refinement plus backtracking over all
// consistent vertex images. Complete enumeration, so only sensible when the
// refined graph is nearly rigid; vertex counts above the budget are refused
// with a resource error.
PermGroup graph_automorphisms(const SimpleGraph& g, int vertex_budget = 64);

// Named groups the frucht tooling exposes, each with its canonical table.
// Covers the cyclic groups through C12, V4, Q8, the dihedral family through
// D6, and A4.
std::vector<std::pair<std::string, AbstractGroup>> frucht_catalog();

}  // namespace minram
