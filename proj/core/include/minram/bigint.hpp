#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "minram/errors.hpp"

namespace minram {

// All integer and rational scalars in the library. GMP keeps rationals in
// lowest terms with a positive denominator, which is the invariant we rely on.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt int_from_string(const std::string& s) {
  try {
    return BigInt(s);
  } catch (const std::invalid_argument&) {
    throw input_error("not a valid integer literal: '" + s + "'");
  }
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const BigRat& x) { return x.get_str(); }

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw input_error("rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

inline int sign(const BigInt& x) { return sgn(x); }
inline int sign(const BigRat& x) { return sgn(x); }

inline bool is_perfect_square(const BigInt& x) {
  if (x < 0) return false;
  return mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

inline BigInt isqrt(const BigInt& x) {
  if (x < 0) throw input_error("isqrt of negative integer");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

inline BigInt pow_ui(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt abs_int(const BigInt& a) { return abs(a); }

// Largest e with p^e | x (x != 0); also returns x / p^e.
inline std::pair<unsigned long, BigInt> valuation(const BigInt& x, const BigInt& p) {
  if (x == 0) throw input_error("valuation of zero");
  if (p < 2) throw input_error("valuation at non-prime base");
  unsigned long v = 0;
  BigInt rest = x, q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    rest = q;
    ++v;
  }
  return {v, rest};
}

inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline BigInt powmod(const BigInt& b, const BigInt& e, const BigInt& m) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline BigInt invmod(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw input_error("not invertible mod " + to_string(m));
  return r;
}

}  // namespace minram
