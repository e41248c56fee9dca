#pragma once

#include "minram/poly.hpp"

namespace minram {

struct RealRootSummary {
  bool squarefree = false;
  int squarefree_degree = 0;
  int distinct_real_roots = 0;
};

RealRootSummary real_root_summary(const PolyZ& f);

// Number of distinct real roots.
int count_real_roots(const PolyZ& f);

// Distinct real roots in the half-open interval (a, b].
int count_real_roots_in(const PolyZ& f, const BigRat& a, const BigRat& b);

// True iff deg(f) distinct real roots, i.e. f is squarefree and totally real.
bool has_all_real_roots(const PolyZ& f);

// Signature (r1, r2) of the field cut out by an irreducible f: r1 real
// embeddings, r2 conjugate complex pairs.
std::pair<int, int> signature(const PolyZ& f);

}  // namespace minram
