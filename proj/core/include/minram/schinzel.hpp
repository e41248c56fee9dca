#pragma once

#include <string>
#include <vector>

#include "minram/bigint.hpp"
#include "minram/galois_certify.hpp"
#include "minram/poly.hpp"
#include "minram/primality.hpp"
#include "minram/ramification.hpp"

namespace minram {

// Base field descriptor: degree d over Q with primitive-element minimal
// polynomial. d = 1 means Q itself (alpha = 1).
struct SchinzelBase {
  int d = 1;
  PolyZ min_poly = poly_from_ints({-1, 1});  // X - 1
};

struct SchinzelParams {
  int n = 2;
  SchinzelBase base;
  int a_box = 3;           // coefficient box |a_i| <= a_box
  long t_min = 1;
  long t_max = 100000;
  int prime_budget = 10000;
  unsigned long seed = 0;
  // Accept H(a,t) only when its primality is settled deterministically.
  bool require_proven = false;
  int threads = 1;
};

// Per-condition rejection counters from the coefficient-box scan.
struct SelectAStats {
  long examined = 0;
  long rejected_separability = 0;  // specialization not squarefree at some p | P
  long rejected_content = 0;       // H(a,T) imprimitive
  long rejected_irreducible = 0;   // H(a,T) reducible over Q
  long rejected_square = 0;        // H(a,T) a square in Q[T]
  long rejected_degenerate = 0;    // disc_X f(X;a,T) identically zero
  std::string describe() const;
};

struct SelectAResult {
  std::vector<BigInt> a;
  PolyZ h;  // H(a, T)
  SelectAStats stats;
};

struct TScanStats {
  long examined = 0;
  long rejected_nonprime = 0;
  long rejected_galois = 0;
  long rejected_real = 0;
  long rejected_ramification = 0;
  std::string describe() const;
};

struct SchinzelInstance {
  int n = 0;
  std::vector<BigInt> a;
  BigInt t;
  PolyZ f;        // f(X; a, t)
  BigInt h_value; // H(a, t) = norm of disc_X f, the single ramified prime
  Primality h_primality = Primality::composite;
  std::vector<BigInt> c;  // c_1..c_n from prod (X - i)
  BigInt big_p;           // product of primes <= d n (n-1)
  GaloisCertificate galois;
  RamificationReport ramification;
  BigInt mod_u = 0, mod_v = 1;  // congruence restriction; v = 1 means none
  SelectAStats select_stats;
  TScanStats scan_stats;
};

// Empirically admissible congruence classes t = u (mod v) for the t-scan.
struct HilbertModulus {
  BigInt v = 1;
  std::vector<BigInt> residues;  // {0} sentinel when v = 1 (no restriction)
  int samples_per_residue = 0;
};

// Coefficients c_1..c_n of prod_{i=1..n} (X - i) after X^n, and the product P
// of the primes <= d n (n - 1).
std::pair<std::vector<BigInt>, BigInt> build_c_and_p(int n, int d);

// f(X; a, T) = X^n + sum_i c_i (T^i + a_i) X^(n-i) + P a_n over Z[T] (base Q).
PolyZT build_f(int n, const std::vector<BigInt>& a);

// H(a, T) = disc_X f(X; a, T) for the rational base, with hard checks
// deg_T H = n(n-1) and lc(H) = prod_{i<k} (k-i)^2.
PolyZ compute_h(int n, const std::vector<BigInt>& a);

// Deterministic box scan ordered by (|a_1|,...,|a_n|, signs): magnitude
// vectors ascend lexicographically, then sign patterns with + before - per
// coordinate, leftmost coordinate most significant. An override is validated
// against the same conditions instead of scanning.
SelectAResult select_a(const SchinzelParams& params,
                       const std::vector<BigInt>* override_a = nullptr);

// Scans t ascending from t_min (restricted to t = u mod v when a modulus is
// given) and accepts the smallest t whose specialization has prime |H(a,t)|,
// a certified S_n Galois group, all roots real, and exactly one finite
// ramified prime. Throws not_found_error with scan statistics on exhaustion.
SchinzelInstance schinzel_search(const SchinzelParams& params,
                                 const std::vector<BigInt>* override_a = nullptr,
                                 const HilbertModulus* modulus = nullptr);

// Scans squarefree candidate moduli in the given order and returns the first
// with a nonempty admissible residue set: u coprime to v, H(a,u) != 0 mod v,
// and sampled specializations at t = u (mod v) still certified S_n.
HilbertModulus hilbert_modulus(const SchinzelParams& params, const PolyZ& h,
                               const std::vector<BigInt>& a,
                               const std::vector<long>& v_candidates,
                               int samples = 2);

}  // namespace minram
