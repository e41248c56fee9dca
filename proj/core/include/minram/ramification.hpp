#pragma once

#include <string>
#include <vector>

#include "minram/bigint.hpp"
#include "minram/intfactor.hpp"
#include "minram/poly.hpp"

namespace minram {

enum class PlaceStatus { ramified, unramified, undecided };

const char* to_string(PlaceStatus s);

struct FinitePlace {
  BigInt prime;
  PlaceStatus status = PlaceStatus::undecided;
  std::string reason;  // the criterion backing the status
};

struct RamificationReport {
  BigInt disc;
  IntFactorization disc_factorization;  // partial when the cofactor resisted
  std::vector<FinitePlace> finite;      // one entry per known prime divisor of disc
  int complex_pairs = 0;
  bool all_real = false;
  // The stem field and its Galois closure ramify over the same finite primes,
  // so the finite statuses apply to the splitting field as well.
  std::string closure_note;
};

// Classifies the finite places of the stem field Q[X]/(f) for monic
// irreducible f. Primes dividing disc(f) exactly once are ramified; otherwise
// Dedekind's criterion decides when the order Z[x] is p-maximal (ramified) and
// reports undecided when it is not. The infinite place is read off the real
// root count.
RamificationReport ramified_primes(const PolyZ& f, unsigned long trial_bound = 1000000);

// Real-embedding signature for squarefree f: 0 complex pairs means the
// infinite places are unramified in the splitting field.
int infinite_place_complex_pairs(const PolyZ& f);

// True iff f mod r has exactly one repeated irreducible factor, that factor is
// linear with multiplicity exactly 2, and all other factors are simple: the
// computable witness that inertia over r is generated by a transposition.
bool transposition_inertia_check(const PolyZ& f, const BigInt& r);

}  // namespace minram
