#include <vector>

#include "doctest.h"
#include "minram/errors.hpp"
#include "minram/galois_certify.hpp"
#include "minram/irreducibility.hpp"
#include "minram/poly.hpp"
#include "minram/ramification.hpp"

using namespace minram;

namespace {

const FinitePlace* find_place(const RamificationReport& r, long prime) {
  for (const auto& place : r.finite)
    if (place.prime == prime) return &place;
  return nullptr;
}

}  // namespace

TEST_CASE("irreducibility certificates and factorizations") {
  IrreducibilityOutcome irr = irreducible_over_q(poly_from_ints({-1, -1, 0, 0, 0, 1}));
  CHECK(irr.irreducible);

  // X^4 + 1 is irreducible over Q but reducible modulo every prime, so the
  // certificate must come from the complete factorization path.
  IrreducibilityOutcome x4p1 = irreducible_over_q(poly_from_ints({1, 0, 0, 0, 1}));
  CHECK(x4p1.irreducible);
  CHECK(x4p1.certificate.method == IrredMethod::zassenhaus_complete);

  IrreducibilityOutcome red = irreducible_over_q(poly_from_ints({-1, 0, 0, 0, 1}));
  CHECK_FALSE(red.irreducible);
  REQUIRE(red.factors.size() >= 2);
  PolyZ prod = PolyZ::constant(BigInt(1));
  for (const auto& f : red.factors) prod = prod * f;
  CHECK(prod == poly_from_ints({-1, 0, 0, 0, 1}));
}

TEST_CASE("galois certification of the reference polynomials") {
  // X^5 - X - 1: the generic quintic.
  GaloisCertificate quintic = galois_certify(poly_from_ints({-1, -1, 0, 0, 0, 1}));
  CHECK(quintic.status == GaloisStatus::certified_sn);
  REQUIRE(quintic.transposition_witness >= 0);
  REQUIRE(quintic.transposition_witness < static_cast<int>(quintic.witnesses.size()));
  CHECK(quintic.witnesses[quintic.transposition_witness].cycle_type ==
        std::vector<int>{2, 1, 1, 1});

  // X^4 + 1 has square discriminant 256, hence lies inside A_4.
  GaloisCertificate cyclotomic = galois_certify(poly_from_ints({1, 0, 0, 0, 1}));
  CHECK(cyclotomic.status == GaloisStatus::not_sn);
  CHECK(cyclotomic.disc_square);

  GaloisCertificate cubic = galois_certify(poly_from_ints({-2, 0, 0, 1}));
  CHECK(cubic.status == GaloisStatus::certified_sn);

  // Same seed, same certificate.
  GaloisCertificate again = galois_certify(poly_from_ints({-2, 0, 0, 1}));
  CHECK(again.witnesses.size() == cubic.witnesses.size());
  CHECK(again.primes_examined == cubic.primes_examined);

  CHECK_THROWS_AS(galois_certify(PolyZ::constant(BigInt(3))), input_error);
}

TEST_CASE("ramification classification of stem fields") {
  RamificationReport quad = ramified_primes(poly_from_ints({28, -15, 1}));
  CHECK(quad.disc == 113);
  REQUIRE(quad.finite.size() == 1);
  CHECK(quad.finite[0].prime == 113);
  CHECK(quad.finite[0].status == PlaceStatus::ramified);
  CHECK(quad.all_real);

  RamificationReport cubic = ramified_primes(poly_from_ints({-2, 0, 0, 1}));
  CHECK(cubic.disc == -108);
  const FinitePlace* two = find_place(cubic, 2);
  const FinitePlace* three = find_place(cubic, 3);
  REQUIRE(two != nullptr);
  REQUIRE(three != nullptr);
  CHECK(two->status == PlaceStatus::ramified);
  CHECK(three->status == PlaceStatus::ramified);
  CHECK_FALSE(cubic.all_real);
  CHECK(cubic.complex_pairs == 1);

  // X^2 + X + 1 ramifies only at 3.
  RamificationReport eisenstein = ramified_primes(poly_from_ints({1, 1, 1}));
  REQUIRE(eisenstein.finite.size() == 1);
  CHECK(eisenstein.finite[0].prime == 3);
}

TEST_CASE("transposition inertia witness at the ramified prime") {
  // Y^2 - 3Y - 6 has disc 33; mod 11 it is the square (Y + 4)^2.
  PolyZ stem = poly_from_ints({-6, -3, 1});
  CHECK(transposition_inertia_check(stem, BigInt(11)));
  CHECK(transposition_inertia_check(stem, BigInt(3)));
  // r must divide the discriminant for the witness to be meaningful.
  CHECK_THROWS_AS(transposition_inertia_check(stem, BigInt(7)), input_error);
  CHECK_THROWS_AS(transposition_inertia_check(stem, BigInt(33)), input_error);

  // A triple repeated root is not the transposition shape: Y^3 mod 3.
  CHECK_FALSE(transposition_inertia_check(poly_from_ints({-27, 27, -9, 1}), BigInt(3)));
}
