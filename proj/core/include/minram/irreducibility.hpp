#pragma once

#include <vector>

#include "minram/bigint.hpp"
#include "minram/poly.hpp"

namespace minram {

// How irreducibility was established.
enum class IrredMethod {
  mod_p_witness,        // irreducible modulo a prime not dividing lc(f)
  zassenhaus_complete,  // Hensel lifting plus subset recombination ruled out proper factors
};

struct IrreducibilityCertificate {
  IrredMethod method = IrredMethod::mod_p_witness;
  BigInt witness_prime;     // mod-p path: the witness prime; zassenhaus: the lifting prime
  int hensel_exponent = 0;  // zassenhaus: factors lifted modulo prime^exponent
  int modular_factors = 0;  // zassenhaus: factor count modulo the lifting prime
};

// Either a certificate or a complete factorization into irreducible integer
// polynomials whose product equals the input exactly.
struct IrreducibilityOutcome {
  bool irreducible = false;
  IrreducibilityCertificate certificate;  // valid when irreducible
  std::vector<PolyZ> factors;             // at least two entries when reducible
};

// Decides irreducibility of f over Q (integer content is immaterial). Fast
// path scans small primes for an irreducible reduction; the fallback is a
// complete Zassenhaus factorization.
IrreducibilityOutcome irreducible_over_q(const PolyZ& f);

// Complete factorization of f (deg f >= 1) into irreducible integer
// polynomials. The product of the returned factors equals f exactly; every
// factor after content absorption is primitive with positive leading
// coefficient, repeated factors appear with multiplicity.
std::vector<PolyZ> factor_over_z(const PolyZ& f);

// Squarefree decomposition of a primitive polynomial: pairwise coprime
// squarefree parts with their multiplicities, product of part^multiplicity
// equal to the input.
std::vector<std::pair<PolyZ, int>> squarefree_decompose_z(const PolyZ& f);

}  // namespace minram
