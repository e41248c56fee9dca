#pragma once

#include <vector>

#include "minram/abstract_group.hpp"
#include "minram/perm_group.hpp"

namespace minram {

// A subgroup H of Gamma in {S_n, A_n} whose normalizer quotient
// N_Gamma(H)/H is isomorphic to the target group.
struct NqHit {
  int n = 0;
  char gamma_kind = 'S';  // 'S' or 'A'
  PermGroup gamma;
  PermGroup h;
  PermGroup normalizer_group;
  BigInt gamma_index;  // [Gamma : H]
  AbstractGroup quotient;
  std::string quotient_name;
};

struct NqSearchResult {
  std::vector<NqHit> hits;  // sorted by (n, [Gamma:H], kind S<A, H elements)
  bool budget_exhausted = false;
  int last_completed_n = 0;
};

// Scans n = n_min..n_max, Gamma in {S_n, A_n}, H over subgroup classes.
// A hit requires [N_Gamma(H) : H] == |G| and N/H isomorphic to G.
// budget_ms == 0 means unlimited; on exhaustion the result is truncated after
// the last fully processed n.
NqSearchResult find_normalizer_quotients(const AbstractGroup& G, int n_min, int n_max,
                                         long budget_ms = 0);

// The point-stabilizer route for G = C2: H = A_(n-1) inside Gamma = S_n has
// N = S_(n-1) and N/H = C2. Defined for n >= 5.
NqHit special_case_an_minus_1(int n);

}  // namespace minram
