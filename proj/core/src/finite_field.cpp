#include "minram/finite_field.hpp"

#include "minram/primality.hpp"

namespace minram {

namespace {

PolyFp poly_x(const FpCtxPtr& ctx) {
  return PolyFp(std::vector<Fp>{Fp(0, ctx), Fp(1, ctx)});
}

std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

// Rabin test: monic f of degree k over F_p is irreducible iff X^(p^k) = X
// mod f and gcd(X^(p^(k/l)) - X, f) = 1 for every prime l | k.
bool is_irreducible_mod_p(const PolyFp& f) {
  const int k = f.degree();
  if (k < 1) return false;
  if (k == 1) return true;
  const BigInt& p = f.lc().modulus();
  const PolyFp fm = make_monic(f);
  const PolyFp x = poly_x(f.lc().ctx());
  for (long l : prime_divisors(k)) {
    BigInt e = pow_ui(p, static_cast<unsigned long>(k / l));
    PolyFp g = powmod_poly(x, e, fm) - x;
    if (gcd_field(g, fm).degree() != 0) return false;
  }
  BigInt e = pow_ui(p, static_cast<unsigned long>(k));
  return powmod_poly(x, e, fm) == rem_field(x, fm);
}

FqCtxPtr make_fq_ctx(const BigInt& p, int k) {
  if (k < 1) throw input_error("extension degree must be >= 1");
  if (classify_prime(p) == Primality::composite) throw input_error("field characteristic must be prime");
  FpCtxPtr base = make_fp_ctx(p);
  BigInt q = pow_ui(p, static_cast<unsigned long>(k));
  for (BigInt j = 0; j < q; ++j) {
    std::vector<Fp> coeffs;
    BigInt rest = j;
    for (int i = 0; i < k; ++i) {
      coeffs.emplace_back(mod_floor(rest, p), base);
      rest /= p;
    }
    coeffs.emplace_back(1, base);
    PolyFp m{std::move(coeffs)};
    if (is_irreducible_mod_p(m)) {
      return std::make_shared<const FqCtx>(FqCtx{std::move(base), k, std::move(q), std::move(m)});
    }
  }
  throw error("no irreducible modulus found");  // unreachable: they exist for every p, k
}

FqElem::FqElem(PolyFp rep, FqCtxPtr ctx) : rep_(std::move(rep)), ctx_(std::move(ctx)) {
  if (!ctx_) throw error("Fq element without context");
  if (rep_.degree() >= ctx_->k) rep_ = rem_field(rep_, ctx_->modulus);
}

FqElem FqElem::from_int(const BigInt& v, const FqCtxPtr& ctx) {
  return FqElem(PolyFp(std::vector<Fp>{Fp(v, ctx->base)}), ctx);
}

FqElem FqElem::from_index(const BigInt& idx, const FqCtxPtr& ctx) {
  BigInt i = mod_floor(idx, ctx->q);
  std::vector<Fp> coeffs;
  const BigInt& p = ctx->base->p;
  for (int d = 0; d < ctx->k; ++d) {
    coeffs.emplace_back(mod_floor(i, p), ctx->base);
    i /= p;
  }
  return FqElem(PolyFp(std::move(coeffs)), ctx);
}

BigInt FqElem::to_index() const {
  const BigInt& p = ctx_->base->p;
  BigInt out = 0;
  for (int d = rep_.degree(); d >= 0; --d) out = out * p + rep_.coeffs()[d].value();
  return out;
}

void FqElem::check(const FqElem& o) const {
  if (!ctx_ || !o.ctx_) throw error("Fq element without context");
  if (ctx_ != o.ctx_ && (ctx_->q != o.ctx_->q || !(ctx_->modulus == o.ctx_->modulus)))
    throw error("Fq context mismatch");
}

FqElem operator+(const FqElem& a, const FqElem& b) {
  a.check(b);
  return FqElem(a.rep_ + b.rep_, a.ctx_);
}

FqElem operator-(const FqElem& a, const FqElem& b) {
  a.check(b);
  return FqElem(a.rep_ - b.rep_, a.ctx_);
}

FqElem operator*(const FqElem& a, const FqElem& b) {
  a.check(b);
  return FqElem(rem_field(a.rep_ * b.rep_, a.ctx_->modulus), a.ctx_);
}

FqElem FqElem::operator-() const { return FqElem(-rep_, ctx_); }

bool operator==(const FqElem& a, const FqElem& b) {
  a.check(b);
  return a.rep_ == b.rep_;
}

FqElem FqElem::inverse() const {
  if (rep_.is_zero()) throw error("inverse of zero");
  // Extended Euclid in F_p[Y] for rep * s = 1 mod modulus.
  PolyFp r0 = ctx_->modulus;
  PolyFp r1 = rep_;
  const Fp zero = Fp(0, ctx_->base);
  PolyFp s0;
  PolyFp s1 = PolyFp(std::vector<Fp>{Fp(1, ctx_->base)});
  while (!r1.is_zero()) {
    auto [q, r2] = divmod_field(r0, r1);
    PolyFp s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw error("modulus not irreducible");
  return FqElem(s0.scaled(r0.lc().inverse()), ctx_);
}

FqElem FqElem::pow(const BigInt& e) const {
  if (e < 0) return inverse().pow(-e);
  return FqElem(powmod_poly(rep_, e, ctx_->modulus), ctx_);
}

std::string FqElem::to_string() const {
  if (ctx_->k == 1) return rep_.is_zero() ? "0" : rep_.coeffs()[0].to_string();
  return "[" + poly_to_string(rep_, "y") + "]";
}

std::string poly_to_string(const PolyFq& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const FqElem& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    if (!first) s += " + ";
    bool is_one = c == ring_ops<FqElem>::one_like(c);
    if (i == 0 || !is_one) s += c.to_string();
    if (i > 0) {
      if (!is_one) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
    first = false;
  }
  return s;
}

}  // namespace minram
