#include "minram/primality.hpp"

#include <mutex>

namespace minram {

namespace {

std::vector<std::uint32_t> sieve_upto(std::uint32_t bound) {
  std::vector<bool> comp(bound + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i <= bound; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= bound; j += i) comp[j] = true;
  }
  return out;
}

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, unsigned long s) {
  BigInt x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;  // a witnesses compositeness
}

// Strong Lucas test with Selfridge parameter selection (method A).
bool strong_lucas_probable_prime(const BigInt& n) {
  long d_abs = 5;
  BigInt D;
  for (;;) {
    D = d_abs;
    int j = mpz_jacobi(D.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0 && abs(D) < n) return false;
    d_abs = d_abs > 0 ? -(d_abs + 2) : -(d_abs - 2);
  }
  // P = 1, Q = (1 - D) / 4
  BigInt Q = (1 - D) / 4;
  BigInt d = n + 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  BigInt t = d >> s;

  BigInt U = 0, V = 2, Qk = 1;
  unsigned long bits = mpz_sizeinbase(t.get_mpz_t(), 2);
  for (unsigned long i = bits; i-- > 0;) {
    U = mod_floor(U * V, n);
    V = mod_floor(V * V - 2 * Qk, n);
    Qk = mod_floor(Qk * Qk, n);
    if (mpz_tstbit(t.get_mpz_t(), i)) {
      BigInt U2 = U + V;
      if (mpz_odd_p(U2.get_mpz_t())) U2 += n;
      U2 = mod_floor(U2 / 2, n);
      BigInt V2 = D * U + V;
      if (mpz_odd_p(V2.get_mpz_t())) V2 += n;
      V2 = mod_floor(V2 / 2, n);
      U = U2;
      V = V2;
      Qk = mod_floor(Qk * Q, n);
    }
  }
  if (U == 0 || V == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    V = mod_floor(V * V - 2 * Qk, n);
    if (V == 0) return true;
    Qk = mod_floor(Qk * Qk, n);
  }
  return false;
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
  static std::vector<std::uint32_t> table;
  static std::once_flag once;
  std::call_once(once, [] { table = sieve_upto(1'000'000); });
  return table;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound <= 1'000'000) {
    for (auto p : small_primes()) {
      if (p > bound) break;
      out.push_back(p);
    }
    return out;
  }
  std::vector<bool> comp(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    if (i * i <= bound)
      for (std::uint64_t j = i * i; j <= bound; j += i) comp[j] = true;
  }
  return out;
}

const char* to_string(Primality p) {
  switch (p) {
    case Primality::composite: return "composite";
    case Primality::prime: return "prime";
    default: return "probable-prime";
  }
}

Primality classify_prime(const BigInt& n) {
  if (n <= 1) throw input_error("primality undefined for n <= 1");
  static const unsigned small_set[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                       41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  for (unsigned p : small_set) {
    if (n == p) return Primality::prime;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Primality::composite;
  }

  BigInt d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;

  const bool deterministic = mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
  if (deterministic) {
    // Complete base set for n < 3.3 * 10^24, hence for all 64-bit inputs.
    static const unsigned bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned a : bases)
      if (miller_rabin_witness(n, BigInt(a), d, s)) return Primality::composite;
    return Primality::prime;
  }

  if (miller_rabin_witness(n, BigInt(2), d, s)) return Primality::composite;
  if (!strong_lucas_probable_prime(n)) return Primality::composite;
  return Primality::probable_prime;
}

}  // namespace minram
