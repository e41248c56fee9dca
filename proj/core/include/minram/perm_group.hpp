#pragma once

#include <map>
#include <optional>
#include <vector>

#include "minram/bigint.hpp"
#include "minram/perm.hpp"

namespace minram {

// Permutation group with a base and strong generating set built by a
// deterministic Schreier-Sims: generators are incorporated in the order
// given, orbits grow in BFS insertion order, and new base points are the
// smallest point moved by the offending residue. Identical input yields an
// identical chain.
class PermGroup {
public:
  struct Level {
    int base = 0;
    std::vector<Perm> gens;        // strong generators fixing all earlier base points
    std::vector<int> orbit;        // BFS insertion order, orbit[0] == base
    std::map<int, Perm> transversal;  // point -> rep u with u(base) == point
  };

  PermGroup() = default;           // trivial group on zero points
  explicit PermGroup(int degree);  // trivial group
  PermGroup(int degree, const std::vector<Perm>& generators);

  static PermGroup symmetric(int n);
  static PermGroup alternating(int n);
  static PermGroup cyclic(int n);                  // <(1 2 ... n)>
  static PermGroup dihedral(int n);                // on n points, n >= 3
  static PermGroup klein_four();                   // degree 4, the normal V in S_4
  static PermGroup from_generators(int degree, const std::vector<Perm>& gens) {
    return PermGroup(degree, gens);
  }

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Level>& chain() const { return levels_; }
  const BigInt& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  bool contains(const Perm& g) const;
  // Residue of sifting g through the chain; identity iff g is a member.
  Perm sift(const Perm& g) const;

  bool is_subgroup_of(const PermGroup& super) const;
  bool is_normal_in(const PermGroup& super) const;

  std::vector<int> orbit_of(int point) const;
  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const;

  // All elements in a deterministic order; throws resource_error beyond cap.
  std::vector<Perm> elements(std::size_t cap = 1'000'000) const;

private:
  void build(const std::vector<Perm>& input_gens);
  void recompute_orbit(std::size_t i);
  void complete_level(std::size_t i);
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
  void add_strong_generator(const Perm& h, std::size_t first, std::size_t last);

  int degree_ = 0;
  std::vector<Perm> gens_;  // original generators, identity and duplicates removed
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

// Normalizer of H in G by base-image backtracking over G's chain, pruned by
// the induced map on H-orbits. Requires equal degrees.
PermGroup normalizer(const PermGroup& G, const PermGroup& H);

// Reference implementation scanning every element; degree <= 8.
PermGroup normalizer_exhaustive(const PermGroup& G, const PermGroup& H);

// Some x in G with x A x^-1 = B, if one exists.
std::optional<Perm> conjugating_element(const PermGroup& G, const PermGroup& A,
                                        const PermGroup& B);

bool are_conjugate(const PermGroup& G, const PermGroup& A, const PermGroup& B);

}  // namespace minram
