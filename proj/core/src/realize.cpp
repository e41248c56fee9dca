#include "minram/realize.hpp"

#include <algorithm>

#include "minram/errors.hpp"
#include "minram/resultant.hpp"

namespace minram {

const char* to_string(RealizeStrategy s) {
  switch (s) {
    case RealizeStrategy::schinzel: return "schinzel";
    case RealizeStrategy::bms: return "bms";
    case RealizeStrategy::ffield: return "ffield";
  }
  return "?";
}

RealizeStrategy realize_strategy_from_string(const std::string& name) {
  if (name == "schinzel") return RealizeStrategy::schinzel;
  if (name == "bms") return RealizeStrategy::bms;
  if (name == "ffield") return RealizeStrategy::ffield;
  throw input_error("unknown strategy: " + name + " (expected schinzel, bms, or ffield)");
}

namespace {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// The point fixed by every generator, or -1. Subgroups fixing a point are
// the ones whose fixed field contains a root of the stem polynomial.
int global_fixed_point(const PermGroup& h, int n) {
  for (int p = 0; p < n; ++p)
    if (h.orbit_of(p).size() == 1) return p;
  return -1;
}

bool all_generators_even(const PermGroup& h) {
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [](const Perm& g) { return g.parity_sign() == 1; });
}

bool is_symmetric_point_stabilizer(const NqHit& hit) {
  return global_fixed_point(hit.h, hit.n) >= 0 &&
         hit.h.order() == factorial(hit.n - 1);
}

bool is_alternating_point_stabilizer(const NqHit& hit) {
  return hit.n >= 4 && global_fixed_point(hit.h, hit.n) >= 0 &&
         hit.h.order() == factorial(hit.n - 1) / 2 && all_generators_even(hit.h);
}

// Hits arrive sorted by [Gamma : H] ascending, so for the trivial target
// the first hit is H = Gamma itself (K = base field). Otherwise the point
// stabilizers are preferred when an explicit K-polynomial is wanted.
const NqHit* select_hit(const std::vector<NqHit>& hits, char kind, bool trivial_target,
                        bool prefer_explicit) {
  const NqHit* first = nullptr;
  const NqHit* alt_stab = nullptr;
  const NqHit* sym_stab = nullptr;
  for (const NqHit& h : hits) {
    if (h.gamma_kind != kind) continue;
    if (!first) first = &h;
    if (!alt_stab && is_alternating_point_stabilizer(h)) alt_stab = &h;
    if (!sym_stab && is_symmetric_point_stabilizer(h)) sym_stab = &h;
  }
  if (!first) return nullptr;
  if (trivial_target || !prefer_explicit) return first;
  if (alt_stab) return alt_stab;
  if (sym_stab) return sym_stab;
  return first;
}

// g(X) = Res_Y(f(Y), (X - Y)^2 - D) with D = disc f: the minimal polynomial
// of alpha + sqrt(D), monic of degree 2 deg f, with roots alpha_i +/- sqrt(D).
PolyZ root_plus_sqrt_disc_poly(const PolyZ& f) {
  BigInt d = discriminant(f);
  std::vector<PolyZ> acoeffs;
  for (int i = 0; i <= f.degree(); ++i) acoeffs.push_back(PolyZ::constant(f.coeff(i)));
  Poly<PolyZ> a(acoeffs);
  Poly<PolyZ> b(std::vector<PolyZ>{PolyZ(std::vector<BigInt>{-d, 0, 1}),
                                   PolyZ(std::vector<BigInt>{0, -2}), PolyZ::constant(1)});
  return resultant(a, b);
}

ExplicitKPoly attach_explicit_poly(const PolyZ& g, const BigInt& level_disc,
                                   const BigInt& expected_degree) {
  if (BigInt(g.degree()) != expected_degree || g.lc() != 1)
    throw verification_error("fixed-field polynomial has the wrong shape: degree " +
                             std::to_string(g.degree()));
  ExplicitKPoly out;
  out.g = g;
  out.irreducibility = irreducible_over_q(g);
  if (!out.irreducibility.irreducible)
    throw verification_error("fixed-field polynomial is reducible; the adjoined "
                             "square root collapses for this stem");
  out.ramification = ramified_primes(g);
  for (const FinitePlace& place : out.ramification.finite)
    if (place.status == PlaceStatus::ramified && level_disc % place.prime != 0)
      throw verification_error("prime " + to_string(place.prime) +
                               " is classified ramified in the fixed field but does "
                               "not divide the splitting-field discriminant");
  return out;
}

[[noreturn]] void rethrow_staged(const char* stage) {
  try {
    throw;
  } catch (const not_found_error& e) {
    throw not_found_error(std::string(stage) + ": " + e.what());
  } catch (const resource_error& e) {
    throw resource_error(std::string(stage) + ": " + e.what());
  }
}

}  // namespace

RealizationCertificate realize(const GroupSpec& spec, const RealizeOptions& opts) {
  const AbstractGroup& target = spec.group;
  const char kind = opts.strategy == RealizeStrategy::ffield ? 'A' : 'S';
  const bool trivial_target = target.order() == 1;

  RealizationCertificate cert;
  cert.group_name = spec.source;
  cert.strategy = opts.strategy;
  cert.gamma_kind = kind;

  int n_lo = opts.n > 0 ? opts.n : 2;
  int n_hi = opts.n > 0 ? opts.n : opts.n_max;
  if (opts.strategy == RealizeStrategy::ffield && opts.n == 0) n_lo = n_hi = opts.ffield.n;

  std::optional<NqHit> chosen;
  if (trivial_target) {
    // H = Gamma: K is the base field, no subgroup scan needed.
    cert.n = n_lo;
    PermGroup gamma = kind == 'S' ? PermGroup::symmetric(cert.n) : PermGroup::alternating(cert.n);
    cert.witness.h = gamma;
    cert.witness.normalizer = gamma;
    cert.witness.quotient = AbstractGroup::trivial();
    cert.witness.iso = {0};
    cert.h_order = gamma.order();
    cert.gamma_order = gamma.order();
  } else {
    for (int n = n_lo; n <= n_hi && !chosen; ++n) {
      if (n > 8)
        throw resource_error("group-search stage: exhaustive subgroup enumeration "
                             "above S8 is out of reach; pick n <= 8");
      NqSearchResult res = find_normalizer_quotients(target, n, n, opts.group_budget_ms);
      if (res.budget_exhausted)
        throw not_found_error("group-search stage: budget exhausted at n = " +
                              std::to_string(n));
      const NqHit* hit = select_hit(res.hits, kind, false, opts.prefer_explicit_k);
      if (hit) chosen = *hit;
    }
    if (!chosen)
      throw not_found_error("group-search stage: no subgroup of " +
                            std::string(kind == 'S' ? "S_n" : "A_n") + " with n in [" +
                            std::to_string(n_lo) + ", " + std::to_string(n_hi) +
                            "] has normalizer quotient " + target.describe());
    cert.n = chosen->n;
    cert.witness.h = chosen->h;
    cert.witness.normalizer = chosen->normalizer_group;
    cert.witness.quotient = chosen->quotient;
    auto iso = chosen->quotient.isomorphism_to(target);
    if (!iso)
      throw verification_error("normalizer quotient stopped matching the target");
    cert.witness.iso = *iso;
    cert.h_order = chosen->h.order();
    cert.gamma_order = kind == 'S' ? factorial(cert.n) : factorial(cert.n) / 2;
  }
  cert.k_degree = cert.gamma_order / cert.h_order;
  cert.k_is_base = cert.h_order == cert.gamma_order;

  const PolyZ* stem = nullptr;
  BigInt level_disc = 0;
  try {
    switch (opts.strategy) {
      case RealizeStrategy::schinzel: {
        SchinzelParams p = opts.schinzel;
        p.n = cert.n;
        cert.schinzel = schinzel_search(p);
        stem = &cert.schinzel->f;
        level_disc = cert.schinzel->ramification.disc;
        break;
      }
      case RealizeStrategy::bms: {
        BmsParams p = opts.bms;
        p.n = cert.n;
        cert.bms = bms_search(p);
        stem = &cert.bms->stem;
        level_disc = cert.bms->ramification.disc;
        break;
      }
      case RealizeStrategy::ffield: {
        FfieldParams p = opts.ffield;
        p.n = cert.n;
        cert.ffield = function_field_family(p);
        break;
      }
    }
  } catch (const error&) {
    rethrow_staged("field-search stage");
  }

  if (cert.k_is_base) {
    cert.ramification_note = "K equals the base field; no place of K ramifies";
  } else if (opts.strategy == RealizeStrategy::ffield) {
    cert.ramification_note = cert.ffield->disc_constant
        ? "no finite place ramifies; Ram(K) is contained in {infinity}"
        : "finite ramification is contained in the listed discriminant factors";
  } else {
    cert.ramification_note =
        "every finite prime ramified in K also ramifies in the splitting field; "
        "the attached report classifies the splitting-field level";
  }

  if (stem && !cert.k_is_base && !trivial_target) {
    NqHit as_hit;
    as_hit.n = cert.n;
    as_hit.h = cert.witness.h;
    if (is_alternating_point_stabilizer(as_hit))
      cert.explicit_k = attach_explicit_poly(root_plus_sqrt_disc_poly(*stem), level_disc,
                                             cert.k_degree);
    else if (is_symmetric_point_stabilizer(as_hit)) {
      ExplicitKPoly out;
      out.g = *stem;
      out.irreducibility = irreducible_over_q(*stem);
      out.ramification = ramified_primes(*stem);
      cert.explicit_k = std::move(out);
    }
  }

  verify_certificate(cert, target);
  return cert;
}

void verify_certificate(const RealizationCertificate& cert, const AbstractGroup& target) {
  const PermGroup& h = cert.witness.h;
  const PermGroup& norm = cert.witness.normalizer;
  PermGroup gamma = cert.gamma_kind == 'S' ? PermGroup::symmetric(cert.n)
                                           : PermGroup::alternating(cert.n);
  if (gamma.order() != cert.gamma_order || h.order() != cert.h_order)
    throw verification_error("certificate group orders do not match the witnesses");
  if (!h.is_subgroup_of(gamma) || !norm.is_subgroup_of(gamma) || !h.is_subgroup_of(norm))
    throw verification_error("witness subgroup containments fail");
  if (!h.is_normal_in(norm))
    throw verification_error("H is not normal in the claimed normalizer");
  for (const Perm& g : norm.generators()) {
    Perm gi = g.inverse();
    for (const Perm& s : h.generators())
      if (!h.contains(g * s * gi))
        throw verification_error("normalizer generator fails to normalize H");
  }

  AbstractGroup quotient = quotient_group(norm, h);
  if (!quotient.is_isomorphic_to(cert.witness.quotient))
    throw verification_error("stored quotient differs from the recomputed one");
  const std::vector<int>& iso = cert.witness.iso;
  if (static_cast<int>(iso.size()) != quotient.order() || quotient.order() != target.order())
    throw verification_error("witness map has the wrong size");
  std::vector<char> seen(iso.size(), 0);
  for (int x : iso) {
    if (x < 0 || x >= target.order() || seen[x])
      throw verification_error("witness map is not a bijection");
    seen[x] = 1;
  }
  for (int a = 0; a < quotient.order(); ++a)
    for (int b = 0; b < quotient.order(); ++b)
      if (iso[quotient.mul(a, b)] != target.mul(iso[a], iso[b]))
        throw verification_error("witness map is not a homomorphism");

  if (cert.k_degree * cert.h_order != cert.gamma_order)
    throw verification_error("fixed-field degree does not match [Gamma : H]");
  if (cert.k_is_base && cert.k_degree != 1)
    throw verification_error("base-field certificate with degree != 1");

  if (cert.explicit_k) {
    const ExplicitKPoly& ek = *cert.explicit_k;
    if (BigInt(ek.g.degree()) != cert.k_degree)
      throw verification_error("explicit polynomial degree differs from [K : F]");
    if (!irreducible_over_q(ek.g).irreducible)
      throw verification_error("explicit polynomial failed irreducibility re-check");
    BigInt level_disc = 0;
    if (cert.bms) level_disc = cert.bms->ramification.disc;
    if (cert.schinzel) level_disc = cert.schinzel->ramification.disc;
    if (level_disc == 0)
      throw verification_error("explicit polynomial without a rational pipeline result");
    for (const FinitePlace& place : ek.ramification.finite)
      if (place.status == PlaceStatus::ramified && level_disc % place.prime != 0)
        throw verification_error("explicit-polynomial ramified prime " +
                                 to_string(place.prime) +
                                 " lies outside the splitting-field discriminant");
  }
}

}  // namespace minram
