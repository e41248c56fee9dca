#include "minram/irreducibility.hpp"

#include <algorithm>
#include <utility>

#include "minram/errors.hpp"
#include "minram/factor_mod.hpp"
#include "minram/primality.hpp"
#include "minram/zmod.hpp"

namespace minram {

namespace {

constexpr int kFastPathPrimes = 30;
constexpr int kLiftPrimeCandidates = 25;

PolyQ to_q(const PolyZ& f) {
  return f.template map<BigRat>([](const BigInt& c) { return BigRat(c); });
}

// Clears denominators and content; result is primitive with positive lc.
PolyZ primitive_from_q(const PolyQ& f) {
  BigInt den = 1;
  for (const BigRat& c : f.coeffs()) den = den / gcd(den, c.get_den()) * c.get_den();
  PolyZ out = f.template map<BigInt>([&](const BigRat& c) {
    BigRat scaled = c * BigRat(den);
    return scaled.get_num();
  });
  auto [cont, prim] = content_and_primitive(out);
  if (prim.lc() < 0) prim = prim.scaled(BigInt(-1));
  return prim;
}

PolyZ gcd_z(const PolyZ& a, const PolyZ& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return primitive_from_q(gcd_field(to_q(a), to_q(b)));
}

// Tests g | f in Z[X]; on success stores the exact quotient.
bool divides_z(const PolyZ& f, const PolyZ& g, PolyZ* quot) {
  if (g.is_zero()) return false;
  if (f.degree() < g.degree()) return false;
  auto [q, r] = divmod_field(to_q(f), to_q(g));
  if (!r.is_zero()) return false;
  for (const BigRat& c : q.coeffs())
    if (c.get_den() != 1) return false;
  if (quot) *quot = q.template map<BigInt>([](const BigRat& c) { return c.get_num(); });
  return true;
}

// --- arithmetic on integer polynomials with coefficients reduced mod m ---

PolyZ reduce_m(const PolyZ& f, const BigInt& m) {
  return PolyZ(f.template map<BigInt>([&](const BigInt& c) { return mod_floor(c, m); }).coeffs());
}

PolyZ mul_m(const PolyZ& a, const PolyZ& b, const BigInt& m) { return reduce_m(a * b, m); }

// Division by a monic divisor; exact in Z/m since the leading coefficient is 1.
std::pair<PolyZ, PolyZ> divmod_monic_m(const PolyZ& f, const PolyZ& g, const BigInt& m) {
  std::vector<BigInt> rem = f.coeffs();
  const int dg = g.degree();
  std::vector<BigInt> quot(rem.size() > static_cast<size_t>(dg)
                               ? rem.size() - static_cast<size_t>(dg)
                               : 1);
  for (int i = static_cast<int>(rem.size()) - 1; i >= dg; --i) {
    BigInt c = mod_floor(rem[static_cast<size_t>(i)], m);
    if (c == 0) continue;
    quot[static_cast<size_t>(i - dg)] = c;
    for (int j = 0; j <= dg; ++j) {
      size_t k = static_cast<size_t>(i - dg + j);
      rem[k] = mod_floor(rem[k] - c * g.coeff(j), m);
    }
  }
  return {PolyZ(std::move(quot)), reduce_m(PolyZ(std::move(rem)), m)};
}

// Symmetric representative with coefficients in (-m/2, m/2].
PolyZ symmetric_m(const PolyZ& f, const BigInt& m) {
  BigInt half = m / 2;
  return PolyZ(f.template map<BigInt>([&](const BigInt& c) {
                  BigInt r = mod_floor(c, m);
                  return r > half ? BigInt(r - m) : r;
                })
                   .coeffs());
}

// Bezout cofactors in F_p[X]: s*a + t*b = 1 for coprime a, b.
std::pair<PolyZ, PolyZ> bezout_mod_p(const PolyZ& a, const PolyZ& b, const FpCtxPtr& ctx) {
  PolyFp r0 = reduce_poly(a, ctx), r1 = reduce_poly(b, ctx);
  PolyFp s0 = PolyFp::constant(Fp(1, ctx)), s1 = PolyFp::constant(Fp(0, ctx));
  PolyFp t0 = s1, t1 = s0;
  while (!r1.is_zero()) {
    auto [q, r] = divmod_field(r0, r1);
    r0 = r1;
    r1 = r;
    PolyFp s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    PolyFp t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0.degree() != 0) throw error("bezout_mod_p: inputs are not coprime");
  Fp inv = r0.lc().inverse();
  return {lift_poly(s0 * PolyFp::constant(inv)), lift_poly(t0 * PolyFp::constant(inv))};
}

// One quadratic Hensel step: given F = g*h and s*g + t*h = 1 (mod m), with g, h
// monic, produces the same data mod m^2.
void hensel_step(const PolyZ& F, PolyZ& g, PolyZ& h, PolyZ& s, PolyZ& t, const BigInt& m) {
  BigInt m2 = m * m;
  PolyZ e = reduce_m(F - g * h, m2);
  auto [q, u] = divmod_monic_m(mul_m(t, e, m2), g, m2);
  PolyZ v = reduce_m(s * e + q * h, m2);
  g = reduce_m(g + u, m2);
  h = reduce_m(h + v, m2);
  PolyZ b = reduce_m(s * g + t * h - PolyZ::constant(BigInt(1)), m2);
  auto [c, d] = divmod_monic_m(mul_m(s, b, m2), h, m2);
  s = reduce_m(s - d, m2);
  t = reduce_m(t - mul_m(t, b, m2) - mul_m(c, g, m2), m2);
}

// Lifts a pairwise-coprime monic factorization of F from mod p to mod target,
// where F is monic and F = prod(leaves) mod p. Recursive binary split.
std::vector<PolyZ> hensel_lift_tree(const PolyZ& F, const std::vector<PolyFp>& leaves,
                                    const BigInt& p, const BigInt& target, const FpCtxPtr& ctx) {
  if (leaves.size() == 1) return {reduce_m(F, target)};
  size_t half = leaves.size() / 2;
  PolyFp left = PolyFp::constant(Fp(1, ctx));
  for (size_t i = 0; i < half; ++i) left = left * leaves[i];
  PolyFp right = PolyFp::constant(Fp(1, ctx));
  for (size_t i = half; i < leaves.size(); ++i) right = right * leaves[i];

  PolyZ g = lift_poly(left), h = lift_poly(right);
  auto [s, t] = bezout_mod_p(g, h, ctx);
  PolyZ Fm = reduce_m(F, target);
  for (BigInt m = p; m < target; m = m * m) hensel_step(Fm, g, h, s, t, m);
  g = reduce_m(g, target);
  h = reduce_m(h, target);

  std::vector<PolyFp> left_leaves(leaves.begin(), leaves.begin() + static_cast<long>(half));
  std::vector<PolyFp> right_leaves(leaves.begin() + static_cast<long>(half), leaves.end());
  std::vector<PolyZ> out = hensel_lift_tree(g, left_leaves, p, target, ctx);
  std::vector<PolyZ> more = hensel_lift_tree(h, right_leaves, p, target, ctx);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

// Coefficient bound for lc(f)-scaled products of true factor subsets.
BigInt factor_coeff_bound(const PolyZ& f) {
  BigInt sumsq = 0;
  for (const BigInt& c : f.coeffs()) sumsq += c * c;
  BigInt norm = isqrt(sumsq) + 1;
  return (pow_ui(BigInt(2), static_cast<unsigned long>(f.degree()) + 1) * norm *
          abs_int(f.lc())) +
         1;
}

struct LiftData {
  BigInt prime;
  int exponent = 0;
  int modular_factors = 0;
};

// Complete factorization of a primitive squarefree polynomial with positive
// leading coefficient. Fills `lift` with the certificate data.
std::vector<PolyZ> zassenhaus_squarefree(const PolyZ& f, LiftData* lift) {
  if (f.degree() == 1) {
    lift->prime = 0;
    return {f};
  }

  // Pick the admissible small prime with the fewest modular factors.
  BigInt best_p = 0;
  std::vector<PolyFp> best_factors;
  int seen = 0;
  for (unsigned long p : small_primes()) {
    BigInt bp(p);
    if (f.lc() % bp == 0) continue;
    auto ctx = make_fp_ctx(bp);
    PolyFp reduced = reduce_poly(f, ctx);
    if (!is_squarefree_mod(reduced)) continue;
    std::vector<ModFactor<Fp>> fac = factor_poly_mod(reduced);
    if (fac.size() == 1) {
      lift->prime = bp;
      lift->exponent = 0;
      lift->modular_factors = 1;
      return {f};
    }
    if (best_p == 0 || fac.size() < best_factors.size()) {
      best_p = bp;
      best_factors.clear();
      for (auto& mf : fac) best_factors.push_back(std::move(mf.factor));
    }
    if (++seen >= kLiftPrimeCandidates) break;
  }
  if (best_p == 0) throw error("zassenhaus: no admissible lifting prime found");

  // Lift the monic factorization of lc^-1 * f to precision above the bound.
  BigInt bound = factor_coeff_bound(f);
  BigInt target = best_p;
  int exponent = 1;
  while (target <= 2 * bound) {
    target = target * target;
    exponent *= 2;
  }
  lift->prime = best_p;
  lift->exponent = exponent;
  lift->modular_factors = static_cast<int>(best_factors.size());

  auto ctx = make_fp_ctx(best_p);
  BigInt lc_inv = invmod(mod_floor(f.lc(), target), target);
  PolyZ f_monic = reduce_m(f.scaled(lc_inv), target);
  std::vector<PolyZ> lifts = hensel_lift_tree(f_monic, best_factors, best_p, target, ctx);

  // Subset recombination by increasing cardinality, lexicographic in index.
  std::vector<PolyZ> result;
  PolyZ current = f;
  while (!lifts.empty()) {
    bool extracted = false;
    for (size_t take = 1; take * 2 <= lifts.size() && !extracted; ++take) {
      std::vector<size_t> idx(take);
      for (size_t i = 0; i < take; ++i) idx[i] = i;
      while (true) {
        PolyZ prod = PolyZ::constant(mod_floor(current.lc(), target));
        for (size_t i : idx) prod = mul_m(prod, lifts[i], target);
        PolyZ cand = symmetric_m(prod, target);
        auto [cont, prim] = content_and_primitive(cand);
        if (prim.lc() < 0) prim = prim.scaled(BigInt(-1));
        PolyZ quot;
        if (divides_z(current, prim, &quot)) {
          result.push_back(prim);
          auto [qc, qp] = content_and_primitive(quot);
          if (qc != 1) throw error("zassenhaus: quotient of primitives not primitive");
          current = qp;
          std::vector<PolyZ> rest;
          for (size_t i = 0, j = 0; i < lifts.size(); ++i) {
            if (j < idx.size() && idx[j] == i) {
              ++j;
              continue;
            }
            rest.push_back(std::move(lifts[i]));
          }
          lifts = std::move(rest);
          extracted = true;
          break;
        }
        // next combination
        size_t pos = take;
        while (pos > 0 && idx[pos - 1] == lifts.size() - take + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (size_t i = pos; i < take; ++i) idx[i] = idx[i - 1] + 1;
      }
    }
    if (!extracted) break;
  }
  if (current.degree() > 0) result.push_back(current);
  return result;
}

}  // namespace

std::vector<std::pair<PolyZ, int>> squarefree_decompose_z(const PolyZ& f) {
  if (f.degree() < 1) throw input_error("squarefree decomposition needs degree >= 1");
  // Yun's algorithm over Q, with primitive integer parts.
  std::vector<std::pair<PolyZ, int>> out;
  PolyZ g = gcd_z(f, f.derivative());
  if (g.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  PolyZ w;
  divides_z(f, g, &w);
  PolyZ y;
  divides_z(f.derivative(), g, &y);
  PolyZ z = y - w.derivative();
  int mult = 1;
  while (!z.is_zero()) {
    PolyZ part = gcd_z(w, z);
    if (part.degree() > 0) out.emplace_back(part, mult);
    PolyZ w2;
    divides_z(w, part, &w2);
    w = w2;
    PolyZ y2;
    divides_z(z, part, &y2);
    z = y2 - w.derivative();
    ++mult;
  }
  if (w.degree() > 0) out.emplace_back(w, mult);
  return out;
}

std::vector<PolyZ> factor_over_z(const PolyZ& f) {
  if (f.is_zero() || f.degree() < 1)
    throw input_error("factorization requires a nonconstant polynomial");
  auto [cont, prim] = content_and_primitive(f);
  if (prim.lc() < 0) {
    prim = prim.scaled(BigInt(-1));
    cont = -cont;
  }
  std::vector<PolyZ> factors;
  for (auto& [part, mult] : squarefree_decompose_z(prim)) {
    LiftData lift;
    std::vector<PolyZ> irr = zassenhaus_squarefree(part, &lift);
    for (int i = 0; i < mult; ++i)
      for (const PolyZ& g : irr) factors.push_back(g);
  }
  std::sort(factors.begin(), factors.end(), [](const PolyZ& a, const PolyZ& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  if (cont != 1) factors.front() = factors.front().scaled(cont);
  return factors;
}

IrreducibilityOutcome irreducible_over_q(const PolyZ& f) {
  if (f.is_zero() || f.degree() < 1)
    throw input_error("irreducibility requires a nonconstant polynomial");
  IrreducibilityOutcome out;

  auto [cont, prim] = content_and_primitive(f);
  if (prim.lc() < 0) prim = prim.scaled(BigInt(-1));

  if (prim.degree() == 1) {
    out.irreducible = true;
    out.certificate.method = IrredMethod::mod_p_witness;
    for (unsigned long p : small_primes())
      if (prim.lc() % BigInt(p) != 0) {
        out.certificate.witness_prime = p;
        break;
      }
    return out;
  }

  int seen = 0;
  for (unsigned long p : small_primes()) {
    BigInt bp(p);
    if (prim.lc() % bp == 0) continue;
    auto ctx = make_fp_ctx(bp);
    std::vector<ModFactor<Fp>> fac = factor_poly_mod(reduce_poly(prim, ctx));
    if (fac.size() == 1 && fac.front().multiplicity == 1) {
      out.irreducible = true;
      out.certificate.method = IrredMethod::mod_p_witness;
      out.certificate.witness_prime = bp;
      return out;
    }
    if (++seen >= kFastPathPrimes) break;
  }

  PolyZ sqf_gcd = gcd_z(prim, prim.derivative());
  if (sqf_gcd.degree() > 0) {
    out.irreducible = false;
    out.factors = factor_over_z(f);
    return out;
  }

  LiftData lift;
  std::vector<PolyZ> irr = zassenhaus_squarefree(prim, &lift);
  if (irr.size() == 1 && cont == 1 && irr.front() == f) {
    out.irreducible = true;
    if (lift.exponent == 0) {
      out.certificate.method = IrredMethod::mod_p_witness;
      out.certificate.witness_prime = lift.prime;
    } else {
      out.certificate.method = IrredMethod::zassenhaus_complete;
      out.certificate.witness_prime = lift.prime;
      out.certificate.hensel_exponent = lift.exponent;
      out.certificate.modular_factors = lift.modular_factors;
    }
    return out;
  }
  if (irr.size() == 1) {
    // Irreducible up to content or sign.
    out.irreducible = true;
    out.certificate.method =
        lift.exponent == 0 ? IrredMethod::mod_p_witness : IrredMethod::zassenhaus_complete;
    out.certificate.witness_prime = lift.prime;
    out.certificate.hensel_exponent = lift.exponent;
    out.certificate.modular_factors = lift.modular_factors;
    return out;
  }
  out.irreducible = false;
  std::vector<PolyZ> factors = std::move(irr);
  std::sort(factors.begin(), factors.end(), [](const PolyZ& a, const PolyZ& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  // Reassemble so the product equals f exactly.
  PolyZ prod = PolyZ::constant(BigInt(1));
  for (const PolyZ& g : factors) prod = prod * g;
  if (!(prod == f)) {
    BigInt scale = f.coeff(f.degree()) / prod.coeff(prod.degree());
    factors.front() = factors.front().scaled(scale);
  }
  out.factors = std::move(factors);
  return out;
}

}  // namespace minram
