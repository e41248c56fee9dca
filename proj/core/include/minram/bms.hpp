#pragma once

#include <string>

#include "minram/bigint.hpp"
#include "minram/galois_certify.hpp"
#include "minram/poly.hpp"
#include "minram/primality.hpp"
#include "minram/ramification.hpp"

namespace minram {

struct BmsScanStats {
  long pairs_examined = 0;
  long rejected_r_composite = 0;
  long rejected_galois = 0;
  long rejected_ramification = 0;
  long rejected_inertia = 0;
  std::string describe() const;
};

// Prime triple r = n^n p + (n-1)^(n-1) q attached to f = X^n - X^(n-1) - p/q,
// certified through the integral model stem(Y) = Y^n - q Y^(n-1) - p q^(n-1)
// obtained by Y = qX.
struct BmsTriple {
  int n = 0;
  BigInt p, q, r;
  Primality p_level = Primality::composite;
  Primality q_level = Primality::composite;
  Primality r_level = Primality::composite;
  PolyZ qf;    // q X^n - q X^(n-1) - p, the cleared rational polynomial
  PolyZ stem;  // integral model in Y
  GaloisCertificate galois;
  RamificationReport ramification;
  bool inertia_at_r = false;  // transposition shape of stem mod r
  BmsScanStats stats;
};

struct BmsParams {
  int n = 2;
  long p_max = 200;
  long q_max = 200;
  unsigned long seed = 0;
  int prime_budget = 10000;
  // Frucht route: additionally require the transposition-inertia witness at r.
  bool require_inertia = false;
  // Accept r only when its primality is settled deterministically.
  bool require_proven = false;
  int threads = 1;
};

// Scans p ascending, then q ascending over primes within the bounds and
// returns the first triple with r (probable-)prime, the stem certified S_n,
// and every classified-ramified prime of the stem inside {p, q, r}. Throws
// not_found_error with scan statistics on exhaustion.
BmsTriple bms_search(const BmsParams& params);

// The integral model Y^n - q Y^(n-1) - p q^(n-1) of X^n - X^(n-1) - p/q.
PolyZ bms_stem(int n, const BigInt& p, const BigInt& q);

}  // namespace minram
