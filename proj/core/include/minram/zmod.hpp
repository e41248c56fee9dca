#pragma once

#include <memory>
#include <string>

#include "minram/bigint.hpp"
#include "minram/errors.hpp"
#include "minram/poly.hpp"

namespace minram {

struct FpCtx {
  BigInt p;
};
using FpCtxPtr = std::shared_ptr<const FpCtx>;

FpCtxPtr make_fp_ctx(const BigInt& p);

// Element of Z/p. Carries its context; mixing contexts with different moduli
// throws.
class Fp {
public:
  Fp() = default;
  Fp(BigInt v, FpCtxPtr ctx) : v_(std::move(v)), ctx_(std::move(ctx)) {
    if (!ctx_) throw error("Fp element without context");
    v_ = mod_floor(v_, ctx_->p);
  }

  const BigInt& value() const { return v_; }
  const FpCtxPtr& ctx() const { return ctx_; }
  const BigInt& modulus() const { return ctx_->p; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    a.check(b);
    BigInt s = a.v_ + b.v_;
    if (s >= a.ctx_->p) s -= a.ctx_->p;
    return Fp::raw(std::move(s), a.ctx_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    a.check(b);
    BigInt s = a.v_ - b.v_;
    if (s < 0) s += a.ctx_->p;
    return Fp::raw(std::move(s), a.ctx_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    a.check(b);
    return Fp::raw(mod_floor(a.v_ * b.v_, a.ctx_->p), a.ctx_);
  }
  Fp operator-() const {
    return Fp::raw(v_ == 0 ? BigInt(0) : BigInt(ctx_->p - v_), ctx_);
  }
  friend bool operator==(const Fp& a, const Fp& b) {
    a.check(b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp inverse() const { return Fp::raw(invmod(v_, ctx_->p), ctx_); }
  Fp pow(const BigInt& e) const;

  std::string to_string() const { return minram::to_string(v_); }

private:
  static Fp raw(BigInt v, FpCtxPtr ctx) {
    Fp r;
    r.v_ = std::move(v);
    r.ctx_ = std::move(ctx);
    return r;
  }
  void check(const Fp& o) const {
    if (!ctx_ || !o.ctx_) throw error("Fp element without context");
    if (ctx_ != o.ctx_ && ctx_->p != o.ctx_->p) throw error("Fp modulus mismatch");
  }

  BigInt v_;
  FpCtxPtr ctx_;
};

template <>
struct ring_ops<Fp> {
  static Fp zero_like(const Fp& a) { return Fp(BigInt(0), a.ctx()); }
  static Fp one_like(const Fp& a) { return Fp(BigInt(1), a.ctx()); }
  static bool is_zero(const Fp& a) { return a.is_zero(); }
  static Fp mul_int(const Fp& a, long k) { return a * Fp(BigInt(k), a.ctx()); }
  static Fp exact_div(const Fp& a, const Fp& b) { return a * b.inverse(); }
};

template <>
struct field_ops<Fp> {
  static Fp inv(const Fp& a) { return a.inverse(); }
};

using PolyFp = Poly<Fp>;

PolyFp reduce_poly(const PolyZ& f, const FpCtxPtr& ctx);

// Lift to Z with coefficients in [0, p) or, when symmetric, in (-p/2, p/2].
PolyZ lift_poly(const PolyFp& f, bool symmetric = false);

std::string poly_to_string(const PolyFp& f, const std::string& var = "X");

}  // namespace minram
