#include "minram/ffield_family.hpp"

#include <random>
#include <sstream>

#include "minram/errors.hpp"
#include "minram/factor_mod.hpp"
#include "minram/resultant.hpp"

namespace minram {

namespace {

bool is_power_of_two(const BigInt& q) {
  if (q < 2) return false;
  return mpz_popcount(q.get_mpz_t()) == 1;
}

// The family in X over F_q[T]: X^n + T X^(n-4) + 1.
Poly<PolyFq> build_family(int n, const FqCtxPtr& ctx) {
  FqElem one = FqElem::from_int(1, ctx);
  PolyFq const_one = PolyFq::constant(one);
  PolyFq t_poly(std::vector<FqElem>{FqElem(PolyFp(), ctx), one});
  std::vector<PolyFq> coeffs(static_cast<size_t>(n) + 1, PolyFq());
  coeffs[0] = const_one;
  coeffs[static_cast<size_t>(n - 4)] = t_poly;
  coeffs[static_cast<size_t>(n)] = const_one;
  return Poly<PolyFq>(std::move(coeffs));
}

// F_2 -> F_(2^e) embedding; coefficients of the family are 0 or 1.
FqElem embed_f2(const FqElem& c, const FqCtxPtr& target) {
  return FqElem::from_int(c.is_zero() ? 0 : 1, target);
}

}  // namespace

FfieldInstance function_field_family(const FfieldParams& params) {
  if (!is_power_of_two(params.q))
    throw input_error("the family requires q a power of 2; odd characteristic is unsupported");
  if (params.n < 9 || params.n % 8 != 1)
    throw input_error("the family requires 9 <= n = 1 (mod 8)");
  if (params.specializations < 0) throw input_error("specialization count must be nonnegative");

  FfieldInstance inst;
  inst.q = params.q;
  inst.k = static_cast<int>(mpz_sizeinbase(params.q.get_mpz_t(), 2)) - 1;
  inst.n = params.n;
  inst.seed = params.seed;
  {
    std::ostringstream os;
    os << "X^" << params.n << " + T*X^" << params.n - 4 << " + 1";
    inst.family = os.str();
  }

  FqCtxPtr ctx = make_fq_ctx(BigInt(2), inst.k);
  Poly<PolyFq> f = build_family(params.n, ctx);
  inst.disc = discriminant(f);
  if (inst.disc.is_zero())
    throw verification_error("family discriminant vanishes identically");
  inst.disc_constant = inst.disc.degree() == 0;
  if (!inst.disc_constant) {
    for (auto& mf : factor_poly_mod(inst.disc, params.seed))
      inst.finite_candidates.push_back(std::move(mf.factor));
  }

  // Seeded cycle-type sampling at specializations T -> gamma. Extensions of
  // the coefficient field are drawn only over the prime field F_2.
  std::mt19937_64 rng(params.seed);
  const int max_ext = inst.k == 1 ? std::max(1, params.max_extension) : 1;
  std::vector<FqCtxPtr> ext_ctx(static_cast<size_t>(max_ext) + 1);
  for (int e = 1; e <= max_ext; ++e)
    ext_ctx[static_cast<size_t>(e)] = e == 1 ? ctx : make_fq_ctx(BigInt(2), inst.k * e);

  inst.all_types_even = true;
  int produced = 0;
  long attempts = 0;
  const long attempt_cap = 50L * params.specializations + 100;
  while (produced < params.specializations) {
    if (++attempts > attempt_cap)
      throw resource_error("could not find enough specialization points off the disc locus");
    int e = max_ext == 1 ? 1 : 1 + static_cast<int>(rng() % static_cast<unsigned long>(max_ext));
    const FqCtxPtr& fctx = ext_ctx[static_cast<size_t>(e)];
    BigInt field_order = fctx->q;
    BigInt idx(static_cast<unsigned long>(rng() % field_order.get_ui()));
    FqElem gamma = FqElem::from_index(idx, fctx);

    if (!inst.disc_constant) {
      // Avoid roots of disc; only same-field evaluation is needed for k > 1.
      PolyFq disc_e = e == 1 ? inst.disc : inst.disc.template map<FqElem>([&](const FqElem& c) {
        return embed_f2(c, fctx);
      });
      if (disc_e.eval(gamma).is_zero()) continue;
    }

    FqElem one = FqElem::from_int(1, fctx);
    std::vector<FqElem> coeffs(static_cast<size_t>(params.n) + 1, FqElem(PolyFp(), fctx));
    coeffs[0] = one;
    coeffs[static_cast<size_t>(params.n - 4)] = gamma;
    coeffs[static_cast<size_t>(params.n)] = one;
    PolyFq f_gamma(std::move(coeffs));

    SpecializationEvidence ev;
    ev.extension = e;
    ev.gamma_index = gamma.to_index();
    ev.cycle_type = factor_degrees(f_gamma, params.seed + static_cast<unsigned long>(produced));
    int transpositions = 0;
    for (int d : ev.cycle_type) transpositions += d - 1;
    ev.even = transpositions % 2 == 0;
    if (!ev.even) inst.all_types_even = false;
    inst.evidence.push_back(std::move(ev));
    ++produced;
  }
  return inst;
}

}  // namespace minram
