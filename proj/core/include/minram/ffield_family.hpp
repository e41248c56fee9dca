#pragma once

#include <string>
#include <vector>

#include "minram/bigint.hpp"
#include "minram/finite_field.hpp"
#include "minram/poly.hpp"

namespace minram {

// One specialization T -> gamma of the family polynomial over an extension of
// the coefficient field.
struct SpecializationEvidence {
  int extension = 1;        // gamma drawn from F_(q^extension)
  BigInt gamma_index;       // canonical index of gamma in its field
  std::vector<int> cycle_type;  // factorization degrees, descending
  bool even = false;        // parity of the Frobenius permutation
};

// The even-characteristic family f = X^n + T X^(n-4) + 1 over F_q[T] with
// 9 <= n = 1 (mod 8); its splitting field ramifies only over T = infinity
// exactly when disc_X f is a nonzero constant.
struct FfieldInstance {
  BigInt q;
  int k = 0;  // q = 2^k
  int n = 0;
  PolyFq disc;                        // disc_X f as a polynomial in T
  bool disc_constant = false;
  std::vector<PolyFq> finite_candidates;  // irreducible factors of disc in T
  std::vector<SpecializationEvidence> evidence;
  bool all_types_even = false;
  unsigned long seed = 0;
  std::string family;  // printable form of f
};

struct FfieldParams {
  int n = 9;
  BigInt q = 2;
  int specializations = 200;
  int max_extension = 3;  // sample gamma from F_q .. F_(q^max_extension)
  unsigned long seed = 0;
};

// Builds the family over F_q[T], certifies the finite ramification locus from
// disc_X f, and gathers seeded cycle-type evidence at specializations with
// nonvanishing discriminant. Preconditions: q a power of 2, n >= 9,
// n = 1 (mod 8). Extensions beyond F_q itself are sampled only for q = 2,
// where the subfield embedding is the identity on coefficients.
FfieldInstance function_field_family(const FfieldParams& params);

}  // namespace minram
