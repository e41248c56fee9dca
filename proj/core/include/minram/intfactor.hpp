#pragma once

#include <vector>

#include "minram/bigint.hpp"
#include "minram/primality.hpp"

namespace minram {

struct IntFactor {
  BigInt prime;
  int exponent = 0;
  Primality certainty = Primality::prime;  // prime or probable_prime
};

// Factorization of n = sign * prod(prime^exponent) * unfactored, where
// unfactored is 1 or a composite beyond the trial bound.
struct IntFactorization {
  int sign = 1;
  std::vector<IntFactor> factors;  // ascending by prime
  BigInt unfactored = 1;

  bool complete() const { return unfactored == 1; }
};

// Trial division by primes up to trial_bound, perfect-power splitting of the
// cofactor, then primality classification. n must be nonzero.
IntFactorization factor_integer_bounded(const BigInt& n, unsigned long trial_bound = 1'000'000);

}  // namespace minram
