#pragma once

#include <memory>
#include <string>

#include "minram/poly.hpp"
#include "minram/zmod.hpp"

namespace minram {

// F_q = F_p[Y]/(m) with q = p^k. The defining modulus is chosen
// deterministically: monic degree-k polynomials are scanned in base-p counter
// order of their lower coefficients and the first irreducible one is taken
// (F_4: Y^2+Y+1, F_8: Y^3+Y+1).
struct FqCtx {
  FpCtxPtr base;
  int k = 0;
  BigInt q;
  PolyFp modulus;
};
using FqCtxPtr = std::shared_ptr<const FqCtx>;

FqCtxPtr make_fq_ctx(const BigInt& p, int k);

bool is_irreducible_mod_p(const PolyFp& f);

class FqElem {
public:
  FqElem() = default;
  FqElem(PolyFp rep, FqCtxPtr ctx);

  static FqElem from_int(const BigInt& v, const FqCtxPtr& ctx);
  // Index i in [0, q) with base-p digits as coefficients, lowest degree first.
  static FqElem from_index(const BigInt& idx, const FqCtxPtr& ctx);
  BigInt to_index() const;

  const PolyFp& rep() const { return rep_; }
  const FqCtxPtr& ctx() const { return ctx_; }
  bool is_zero() const { return rep_.is_zero(); }

  friend FqElem operator+(const FqElem& a, const FqElem& b);
  friend FqElem operator-(const FqElem& a, const FqElem& b);
  friend FqElem operator*(const FqElem& a, const FqElem& b);
  FqElem operator-() const;
  friend bool operator==(const FqElem& a, const FqElem& b);
  friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

  FqElem inverse() const;
  FqElem pow(const BigInt& e) const;

  std::string to_string() const;

private:
  void check(const FqElem& o) const;

  PolyFp rep_;
  FqCtxPtr ctx_;
};

template <>
struct ring_ops<FqElem> {
  static FqElem zero_like(const FqElem& a) { return FqElem(PolyFp(), a.ctx()); }
  static FqElem one_like(const FqElem& a) { return FqElem::from_int(1, a.ctx()); }
  static bool is_zero(const FqElem& a) { return a.is_zero(); }
  static FqElem mul_int(const FqElem& a, long k) { return a * FqElem::from_int(k, a.ctx()); }
  static FqElem exact_div(const FqElem& a, const FqElem& b) { return a * b.inverse(); }
};

template <>
struct field_ops<FqElem> {
  static FqElem inv(const FqElem& a) { return a.inverse(); }
};

using PolyFq = Poly<FqElem>;

std::string poly_to_string(const PolyFq& f, const std::string& var = "X");

// Uniform field parameters for algorithms generic over F_p and F_q.
template <class F>
struct field_info;

template <>
struct field_info<Fp> {
  static BigInt characteristic(const Fp& a) { return a.modulus(); }
  static BigInt order(const Fp& a) { return a.modulus(); }
  static Fp from_index(const BigInt& idx, const Fp& sample) { return Fp(idx, sample.ctx()); }
};

template <>
struct field_info<FqElem> {
  static BigInt characteristic(const FqElem& a) { return a.ctx()->base->p; }
  static BigInt order(const FqElem& a) { return a.ctx()->q; }
  static FqElem from_index(const BigInt& idx, const FqElem& sample) {
    return FqElem::from_index(idx, sample.ctx());
  }
};

}  // namespace minram
