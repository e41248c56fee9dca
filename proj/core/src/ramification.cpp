#include "minram/ramification.hpp"

#include <algorithm>

#include "minram/errors.hpp"
#include "minram/factor_mod.hpp"
#include "minram/irreducibility.hpp"
#include "minram/resultant.hpp"
#include "minram/sturm.hpp"
#include "minram/zmod.hpp"

namespace minram {

const char* to_string(PlaceStatus s) {
  switch (s) {
    case PlaceStatus::ramified: return "ramified";
    case PlaceStatus::unramified: return "unramified";
    case PlaceStatus::undecided: return "undecided";
  }
  return "unknown";
}

namespace {

// Dedekind's criterion: Z[x]/(f) is p-maximal iff gcd((g*h - f)/p, gbar, hbar)
// is 1, where gbar = product of the distinct irreducible factors of f mod p
// and hbar = f mod p divided by gbar.
bool dedekind_p_maximal(const PolyZ& f, const BigInt& p) {
  auto ctx = make_fp_ctx(p);
  PolyFp fbar = reduce_poly(f, ctx);
  std::vector<ModFactor<Fp>> factors = factor_poly_mod(fbar);
  PolyFp gbar = PolyFp::constant(Fp(1, ctx));
  for (const auto& mf : factors) gbar = gbar * mf.factor;
  PolyFp hbar = divmod_field(fbar, gbar).first;

  PolyZ g = lift_poly(gbar);
  PolyZ h = lift_poly(hbar);
  PolyZ num = g * h - f;
  std::vector<BigInt> quo(num.coeffs().size());
  for (size_t i = 0; i < quo.size(); ++i) {
    if (num.coeff(static_cast<int>(i)) % p != 0)
      throw error("dedekind: g*h - f not divisible by p");
    quo[i] = num.coeff(static_cast<int>(i)) / p;
  }
  PolyFp F = reduce_poly(PolyZ(std::move(quo)), ctx);

  PolyFp d = gcd_field(F, gbar);
  if (d.degree() == 0) return true;
  d = gcd_field(d, hbar);
  return d.degree() == 0;
}

}  // namespace

int infinite_place_complex_pairs(const PolyZ& f) {
  if (f.is_zero() || f.degree() < 1) throw input_error("signature needs degree >= 1");
  if (discriminant(f) == 0) throw input_error("signature needs a squarefree polynomial");
  int real = count_real_roots(f);
  return (f.degree() - real) / 2;
}

RamificationReport ramified_primes(const PolyZ& f, unsigned long trial_bound) {
  if (f.is_zero() || f.degree() < 1) throw input_error("ramification needs degree >= 1");
  if (f.lc() != 1) throw input_error("ramification needs a monic polynomial");
  IrreducibilityOutcome irr = irreducible_over_q(f);
  if (!irr.irreducible) throw input_error("ramification needs an irreducible polynomial");

  RamificationReport report;
  report.disc = discriminant(f);
  report.disc_factorization = factor_integer_bounded(report.disc, trial_bound);
  report.closure_note =
      "finite ramification of the stem field and of its splitting field coincide";

  for (const IntFactor& fac : report.disc_factorization.factors) {
    FinitePlace place;
    place.prime = fac.prime;
    if (fac.exponent == 1) {
      place.status = PlaceStatus::ramified;
      place.reason = "disc valuation 1 (squarefree part)";
    } else {
      auto ctx = make_fp_ctx(fac.prime);
      if (is_squarefree_mod(reduce_poly(f, ctx))) {
        place.status = PlaceStatus::unramified;
        place.reason = "f separable mod p";
      } else if (dedekind_p_maximal(f, fac.prime)) {
        place.status = PlaceStatus::ramified;
        place.reason = "Dedekind: order is p-maximal, disc valuation positive";
      } else {
        place.status = PlaceStatus::undecided;
        place.reason = "Dedekind: order not p-maximal";
      }
    }
    report.finite.push_back(std::move(place));
  }

  report.complex_pairs = infinite_place_complex_pairs(f);
  report.all_real = report.complex_pairs == 0;
  return report;
}

bool transposition_inertia_check(const PolyZ& f, const BigInt& r) {
  if (f.is_zero() || f.degree() < 1) throw input_error("inertia check needs degree >= 1");
  if (classify_prime(r) == Primality::composite) throw input_error("inertia check needs r prime");
  BigInt disc = discriminant(f);
  if (disc % r != 0) throw input_error("inertia check needs r | disc(f)");
  if (f.lc() % r == 0) return false;  // degree drops mod r, not the transposition shape

  auto ctx = make_fp_ctx(r);
  std::vector<ModFactor<Fp>> factors = factor_poly_mod(reduce_poly(f, ctx));
  int repeated = 0;
  bool shape_ok = true;
  for (const auto& mf : factors) {
    if (mf.multiplicity == 1) continue;
    ++repeated;
    if (mf.multiplicity != 2 || mf.factor.degree() != 1) shape_ok = false;
  }
  return repeated == 1 && shape_ok;
}

}  // namespace minram
