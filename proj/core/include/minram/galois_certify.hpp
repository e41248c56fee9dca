#pragma once

#include <string>
#include <vector>

#include "minram/bigint.hpp"
#include "minram/irreducibility.hpp"
#include "minram/poly.hpp"

namespace minram {

enum class GaloisStatus {
  certified_sn,        // irreducible + primitivity witness + transposition witness
  certified_subset_an, // reserved for external subset certificates
  evidence_only,       // no disproof, witness budget exhausted
  not_sn,              // reducible, or square discriminant excludes transpositions
};

const char* to_string(GaloisStatus s);

// Frobenius cycle type observed at a prime not dividing disc(f).
struct CycleTypeWitness {
  BigInt prime;
  std::vector<int> cycle_type;  // partition of deg f, descending
};

struct GaloisCertificate {
  GaloisStatus status = GaloisStatus::evidence_only;
  bool disc_square = false;
  BigInt disc;
  IrreducibilityOutcome irreducibility;
  // Smallest witness prime per distinct observed cycle type, ascending primes.
  std::vector<CycleTypeWitness> witnesses;
  int primitivity_witness = -1;   // index into witnesses, -1 when absent
  int transposition_witness = -1; // index into witnesses, -1 when absent
  int primes_examined = 0;        // good primes consumed from the budget
};

// Sound S_n certification for monic f with disc(f) != 0. certified_sn requires
// (a) irreducibility, (b) an (n-1)-cycle or a p-cycle for a prime n/2 < p < n-2
// observed at a good prime, and (c) an observed transposition type (2,1,...,1).
// A square discriminant forces Gal(f) inside A_n and yields not_sn with the
// disc_square flag set. Witness primes are scanned ascending, so the reported
// witnesses are the smallest ones.
GaloisCertificate galois_certify(const PolyZ& f, unsigned long seed = 0,
                                 int prime_budget = 10000);

}  // namespace minram
