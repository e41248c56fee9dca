#include "minram/zmod.hpp"

namespace minram {

FpCtxPtr make_fp_ctx(const BigInt& p) {
  if (p < 2) throw input_error("modulus must be >= 2");
  return std::make_shared<const FpCtx>(FpCtx{p});
}

Fp Fp::pow(const BigInt& e) const {
  if (e < 0) return inverse().pow(-e);
  return Fp(powmod(v_, e, ctx_->p), ctx_);
}

PolyFp reduce_poly(const PolyZ& f, const FpCtxPtr& ctx) {
  return f.map<Fp>([&](const BigInt& c) { return Fp(c, ctx); });
}

PolyZ lift_poly(const PolyFp& f, bool symmetric) {
  if (f.is_zero()) return PolyZ();
  const BigInt& p = f.lc().modulus();
  return f.map<BigInt>([&](const Fp& c) {
    BigInt v = c.value();
    if (symmetric && 2 * v > p) v -= p;
    return v;
  });
}

std::string poly_to_string(const PolyFp& f, const std::string& var) {
  return poly_to_string(lift_poly(f), var);
}

}  // namespace minram
