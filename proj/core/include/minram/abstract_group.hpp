#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minram/perm_group.hpp"

namespace minram {

// Finite group as a multiplication table on 0..n-1, capped at order 512.
// Element 0 is always the identity (tables are relabeled on construction).
class AbstractGroup {
public:
  static constexpr int kMaxOrder = 512;

  AbstractGroup() : t_{{0}}, inv_{0} {}  // trivial group

  // Validates: square shape, Latin square, identity, associativity
  // (exhaustive up to order 64, deterministic sampling above).
  static AbstractGroup from_table(std::vector<std::vector<int>> table);

  static AbstractGroup trivial();
  static AbstractGroup cyclic(int n);
  static AbstractGroup dihedral(int n);  // order 2n, n >= 3
  static AbstractGroup klein_four();
  static AbstractGroup quaternion8();
  static AbstractGroup symmetric(int n);    // n! <= 512
  static AbstractGroup alternating(int n);  // n!/2 <= 512
  static AbstractGroup from_perm_group(const PermGroup& G);

  int order() const { return static_cast<int>(t_.size()); }
  int mul(int a, int b) const { return t_[a][b]; }
  int inverse(int a) const { return inv_[a]; }
  int element_order(int a) const;

  bool is_abelian() const;
  int center_size() const;
  std::vector<int> element_order_multiset() const;   // ascending
  std::vector<int> conjugacy_class_sizes() const;    // ascending
  // Cheap conjugation-invariant fingerprint used to prefilter isomorphism.
  std::string invariant_key() const;

  // Isomorphism witness this -> other as an image vector, or nullopt.
  std::optional<std::vector<int>> isomorphism_to(const AbstractGroup& other) const;
  bool is_isomorphic_to(const AbstractGroup& other) const;

  // Small-catalog structure name ("C6", "D4", "Q8", ...) or "order N".
  std::string describe() const;

  const std::vector<std::vector<int>>& table() const { return t_; }

private:
  void finish();  // inverses, after t_ is set with identity 0

  std::vector<std::vector<int>> t_;
  std::vector<int> inv_;
};

// N/H for H normal in N; the coset of the identity gets label 0. Cosets are
// labeled in first-seen order over the deterministic element enumeration.
AbstractGroup quotient_group(const PermGroup& N, const PermGroup& H);

}  // namespace minram
