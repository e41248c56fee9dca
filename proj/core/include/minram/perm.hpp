#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minram/bigint.hpp"

namespace minram {

// Permutation of {0, ..., degree-1}. Composition is function composition:
// (a * b)(x) = a(b(x)), i.e. the right factor acts first. Cycle strings use
// 1-based points.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);
  // Parses "(1 2 3)(4 5)"; separators are spaces or commas. Non-disjoint
  // cycles compose with the rightmost cycle acting first. Points must lie in
  // [1, degree]; degree 0 infers the largest point mentioned.
  static Perm from_cycles(const std::string& text, int degree = 0);
  // Transposition (a b) on 0-based points.
  static Perm transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  friend Perm operator*(const Perm& a, const Perm& b);
  Perm inverse() const;
  bool is_identity() const;
  long order() const;
  int parity_sign() const;  // +1 even, -1 odd
  // Cycle lengths including fixed points, descending.
  std::vector<int> cycle_type() const;
  int smallest_moved_point() const;  // -1 when identity

  // Re-embed into S_m for m >= degree, fixing the new points.
  Perm extended(int new_degree) const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  // 4 bits per point; requires degree <= 16.
  std::uint64_t packed() const;
  static Perm unpacked(std::uint64_t code, int degree);
  std::size_t hash() const;

  std::string to_cycle_string() const;

private:
  std::vector<int> img_;
};

// g a g^-1, the relabeling of a along g.
Perm conjugate(const Perm& a, const Perm& g);

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace minram
