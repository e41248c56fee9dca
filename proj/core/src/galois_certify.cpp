#include "minram/galois_certify.hpp"

#include <algorithm>

#include "minram/errors.hpp"
#include "minram/factor_mod.hpp"
#include "minram/primality.hpp"
#include "minram/resultant.hpp"
#include "minram/zmod.hpp"

namespace minram {

const char* to_string(GaloisStatus s) {
  switch (s) {
    case GaloisStatus::certified_sn: return "certified-Sn";
    case GaloisStatus::certified_subset_an: return "certified-subset-An";
    case GaloisStatus::evidence_only: return "evidence-only";
    case GaloisStatus::not_sn: return "not-Sn";
  }
  return "unknown";
}

namespace {

bool is_nm1_cycle(const std::vector<int>& type, int n) {
  return n >= 2 && type.size() == 2 && type[0] == n - 1 && type[1] == 1;
}

// A p-cycle for prime p with n/2 < p < n-2 forces primitivity (Jordan).
bool is_jordan_prime_cycle(const std::vector<int>& type, int n) {
  if (type.empty() || type[0] <= 1) return false;
  int p = type[0];
  for (size_t i = 1; i < type.size(); ++i)
    if (type[i] != 1) return false;
  if (2 * p <= n || p >= n - 2) return false;
  return classify_prime(BigInt(p)) != Primality::composite;
}

bool is_transposition(const std::vector<int>& type, int n) {
  if (static_cast<int>(type.size()) != n - 1) return false;
  if (type[0] != 2) return false;
  for (size_t i = 1; i < type.size(); ++i)
    if (type[i] != 1) return false;
  return true;
}

}  // namespace

GaloisCertificate galois_certify(const PolyZ& f, unsigned long seed, int prime_budget) {
  if (f.is_zero() || f.degree() < 1) throw input_error("galois_certify needs degree >= 1");
  if (f.lc() != 1) throw input_error("galois_certify needs a monic polynomial");
  const int n = f.degree();

  GaloisCertificate cert;
  cert.disc = discriminant(f);
  if (cert.disc == 0) throw input_error("galois_certify needs a squarefree polynomial");
  cert.disc_square = cert.disc > 0 && is_perfect_square(cert.disc);

  if (n == 1) {
    cert.status = GaloisStatus::certified_sn;
    cert.irreducibility.irreducible = true;
    return cert;
  }

  cert.irreducibility = irreducible_over_q(f);
  if (!cert.irreducibility.irreducible) {
    cert.status = GaloisStatus::not_sn;
    return cert;
  }
  if (cert.disc_square) {
    cert.status = GaloisStatus::not_sn;
    return cert;
  }

  bool have_primitivity = false, have_transposition = false;
  for (std::uint32_t p : small_primes()) {
    if (cert.primes_examined >= prime_budget) break;
    BigInt bp(p);
    if (cert.disc % bp == 0) continue;
    ++cert.primes_examined;

    std::vector<int> type = factor_degrees(reduce_poly(f, make_fp_ctx(bp)), seed);
    bool known = false;
    for (const CycleTypeWitness& w : cert.witnesses)
      if (w.cycle_type == type) {
        known = true;
        break;
      }
    int index = -1;
    if (!known) {
      index = static_cast<int>(cert.witnesses.size());
      cert.witnesses.push_back({bp, type});
    }

    if (!have_primitivity && index >= 0 &&
        (is_nm1_cycle(type, n) || is_jordan_prime_cycle(type, n))) {
      have_primitivity = true;
      cert.primitivity_witness = index;
    }
    if (!have_transposition && index >= 0 && is_transposition(type, n)) {
      have_transposition = true;
      cert.transposition_witness = index;
    }
    if (have_primitivity && have_transposition) break;
  }

  cert.status = have_primitivity && have_transposition ? GaloisStatus::certified_sn
                                                       : GaloisStatus::evidence_only;
  return cert;
}

}  // namespace minram
