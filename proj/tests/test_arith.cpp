#include <vector>

#include "doctest.h"
#include "minram/errors.hpp"
#include "minram/intfactor.hpp"
#include "minram/primality.hpp"

using namespace minram;

TEST_CASE("classify_prime on small and structured inputs") {
  CHECK(classify_prime(BigInt(2)) == Primality::prime);
  CHECK(classify_prime(BigInt(3)) == Primality::prime);
  CHECK(classify_prime(BigInt(113)) == Primality::prime);
  CHECK(classify_prime(BigInt(9887)) == Primality::prime);
  CHECK(classify_prime(BigInt(146437)) == Primality::prime);

  CHECK(classify_prime(BigInt(1)) == Primality::composite);
  CHECK(classify_prime(BigInt(0)) == Primality::composite);
  CHECK(classify_prime(BigInt(4)) == Primality::composite);
  // Carmichael numbers must not slip through as prime.
  CHECK(classify_prime(BigInt(561)) == Primality::composite);
  CHECK(classify_prime(BigInt(41041)) == Primality::composite);

  // 2^61 - 1 is prime; large inputs may only reach probable status but must
  // never be called composite.
  BigInt m61 = (BigInt(1) << 61) - 1;
  CHECK(is_prime_or_probable(classify_prime(m61)));
  CHECK(classify_prime(m61 * m61) == Primality::composite);
}

TEST_CASE("factor_integer_bounded recovers the factorization exactly") {
  auto roundtrip = [](const BigInt& n) {
    IntFactorization f = factor_integer_bounded(n);
    BigInt prod = f.sign;
    for (const auto& pf : f.factors) {
      CHECK(is_prime_or_probable(pf.certainty));
      for (int i = 0; i < pf.exponent; ++i) prod *= pf.prime;
    }
    prod *= f.unfactored;
    CHECK(prod == n);
    return f;
  };

  IntFactorization f120 = roundtrip(BigInt(120));
  REQUIRE(f120.factors.size() == 3);
  CHECK(f120.factors[0].prime == 2);
  CHECK(f120.factors[0].exponent == 3);
  CHECK(f120.factors[1].prime == 3);
  CHECK(f120.factors[2].prime == 5);
  CHECK(f120.complete());

  IntFactorization fneg = roundtrip(BigInt(-33));
  CHECK(fneg.sign == -1);
  REQUIRE(fneg.factors.size() == 2);
  CHECK(fneg.factors[0].prime == 3);
  CHECK(fneg.factors[1].prime == 11);

  roundtrip(BigInt(1));
  roundtrip(BigInt(-1));

  // The square of a prime beyond the trial bound is caught by the
  // perfect-power split.
  BigInt q("10000019");
  REQUIRE(classify_prime(q) == Primality::prime);
  IntFactorization fsq = roundtrip(q * q);
  REQUIRE(fsq.factors.size() == 1);
  CHECK(fsq.factors[0].prime == q);
  CHECK(fsq.factors[0].exponent == 2);
  CHECK(fsq.complete());

  CHECK_THROWS_AS(factor_integer_bounded(BigInt(0)), input_error);
}
