#include "minram/intfactor.hpp"

#include "minram/errors.hpp"

namespace minram {

namespace {

// Largest k with rem = m^k exactly; returns {m, k}, k = 1 when not a power.
std::pair<BigInt, int> full_root(const BigInt& rem) {
  BigInt m = rem;
  int k = 1;
  bool again = true;
  while (again && mpz_perfect_power_p(m.get_mpz_t())) {
    again = false;
    for (unsigned long e = 2; e <= mpz_sizeinbase(m.get_mpz_t(), 2); ++e) {
      BigInt root;
      if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), e) != 0) {
        m = root;
        k *= static_cast<int>(e);
        again = true;
        break;
      }
    }
  }
  return {m, k};
}

}  // namespace

IntFactorization factor_integer_bounded(const BigInt& n, unsigned long trial_bound) {
  if (n == 0) throw input_error("cannot factor zero");
  IntFactorization out;
  BigInt rem = n;
  if (rem < 0) {
    out.sign = -1;
    rem = -rem;
  }
  for (unsigned long p : primes_up_to(trial_bound)) {
    if (rem == 1) break;
    if (BigInt(p) * p > rem) break;
    if (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      int e = 0;
      while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
        mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
        ++e;
      }
      out.factors.push_back({BigInt(p), e, Primality::prime});
    }
  }
  if (rem > 1) {
    auto [base, k] = full_root(rem);
    Primality cls = classify_prime(base);
    if (cls == Primality::composite) {
      out.unfactored = rem;
    } else {
      out.factors.push_back({base, k, cls});
    }
  }
  return out;
}

}  // namespace minram
