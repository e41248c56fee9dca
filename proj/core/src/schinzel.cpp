#include "minram/schinzel.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <sstream>
#include <thread>

#include "minram/errors.hpp"
#include "minram/factor_mod.hpp"
#include "minram/resultant.hpp"
#include "minram/sturm.hpp"
#include "minram/zmod.hpp"

namespace minram {

std::string SelectAStats::describe() const {
  std::ostringstream os;
  os << "examined " << examined << ", rejected: separability " << rejected_separability
     << ", content " << rejected_content << ", irreducibility " << rejected_irreducible
     << ", square " << rejected_square << ", degenerate " << rejected_degenerate;
  return os.str();
}

std::string TScanStats::describe() const {
  std::ostringstream os;
  os << "examined " << examined << ", rejected: nonprime " << rejected_nonprime << ", galois "
     << rejected_galois << ", real roots " << rejected_real << ", ramification "
     << rejected_ramification;
  return os.str();
}

std::pair<std::vector<BigInt>, BigInt> build_c_and_p(int n, int d) {
  if (n < 2) throw input_error("need n >= 2");
  if (d < 1) throw input_error("need d >= 1");
  PolyZ prod = PolyZ::constant(BigInt(1));
  for (int i = 1; i <= n; ++i) prod = prod * poly_from_ints({-i, 1});
  std::vector<BigInt> c(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) c[static_cast<size_t>(i - 1)] = prod.coeff(n - i);
  BigInt big_p = 1;
  for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(d) * n * (n - 1)))
    big_p *= BigInt(p);
  return {std::move(c), std::move(big_p)};
}

PolyZT build_f(int n, const std::vector<BigInt>& a) {
  if (static_cast<int>(a.size()) != n) throw input_error("coefficient vector must have length n");
  auto [c, big_p] = build_c_and_p(n, 1);
  std::vector<PolyZ> coeffs(static_cast<size_t>(n) + 1);
  coeffs[static_cast<size_t>(n)] = PolyZ::constant(BigInt(1));
  for (int i = 1; i <= n; ++i) {
    // c_i (T^i + a_i) as the X^(n-i) coefficient.
    std::vector<BigInt> t_poly(static_cast<size_t>(i) + 1);
    t_poly[0] = a[static_cast<size_t>(i - 1)];
    t_poly[static_cast<size_t>(i)] = 1;
    coeffs[static_cast<size_t>(n - i)] = PolyZ(std::move(t_poly)).scaled(c[static_cast<size_t>(i - 1)]);
  }
  coeffs[0] = coeffs[0] + PolyZ::constant(big_p * a[static_cast<size_t>(n - 1)]);
  return PolyZT(std::move(coeffs));
}

PolyZ compute_h(int n, const std::vector<BigInt>& a) {
  PolyZT f = build_f(n, a);
  PolyZ h = discriminant(f);
  if (h.is_zero()) throw input_error("degenerate coefficients: disc_X f vanishes identically");
  if (h.degree() != n * (n - 1))
    throw verification_error("H(a,T) has wrong T-degree " + std::to_string(h.degree()));
  BigInt expected_lc = 1;
  for (int i = 1; i < n; ++i)
    for (int k = i + 1; k <= n; ++k) expected_lc *= BigInt(k - i) * BigInt(k - i);
  if (h.lc() != expected_lc)
    throw verification_error("H(a,T) has wrong leading coefficient " + to_string(h.lc()));
  return h;
}

namespace {

// Condition (iii): X^n + sum c_i a_i X^(n-i) squarefree mod every p | P.
bool separable_at_bad_primes(int n, const std::vector<BigInt>& c, const BigInt& big_p,
                             const std::vector<BigInt>& a) {
  std::vector<BigInt> coeffs(static_cast<size_t>(n) + 1);
  coeffs[static_cast<size_t>(n)] = 1;
  for (int i = 1; i <= n; ++i)
    coeffs[static_cast<size_t>(n - i)] = c[static_cast<size_t>(i - 1)] * a[static_cast<size_t>(i - 1)];
  PolyZ spec{std::vector<BigInt>(coeffs)};
  for (std::uint32_t p : small_primes()) {
    BigInt bp(p);
    if (big_p % bp != 0) break;  // P is a product of consecutive small primes
    if (!is_squarefree_mod(reduce_poly(spec, make_fp_ctx(bp)))) return false;
  }
  return true;
}

bool is_square_poly_q(const PolyZ& h) {
  if (h.degree() % 2 != 0) return false;
  if (h.lc() < 0) return false;
  // A square has squarefree part of degree 0.
  PolyQ hq = h.template map<BigRat>([](const BigInt& x) { return BigRat(x); });
  PolyQ g = gcd_field(hq, hq.derivative());
  return 2 * g.degree() == h.degree();
}

enum class ARejection { none, separability, degenerate, content, irreducible, square };

ARejection check_a(int n, const std::vector<BigInt>& c, const BigInt& big_p,
                   const std::vector<BigInt>& a, PolyZ* h_out) {
  if (!separable_at_bad_primes(n, c, big_p, a)) return ARejection::separability;
  PolyZ h;
  try {
    h = compute_h(n, a);
  } catch (const input_error&) {
    return ARejection::degenerate;
  }
  auto [cont, prim] = content_and_primitive(h);
  if (cont != 1) return ARejection::content;
  if (!irreducible_over_q(h).irreducible) return ARejection::irreducible;
  if (is_square_poly_q(h)) return ARejection::square;
  *h_out = std::move(h);
  return ARejection::none;
}

const char* rejection_name(ARejection r) {
  switch (r) {
    case ARejection::separability: return "separability at p | P (condition iii)";
    case ARejection::degenerate: return "degenerate discriminant";
    case ARejection::content: return "content (condition iv)";
    case ARejection::irreducible: return "irreducibility of H (condition i)";
    case ARejection::square: return "H a square (condition ii)";
    case ARejection::none: break;
  }
  return "none";
}

void count_rejection(SelectAStats* stats, ARejection r) {
  switch (r) {
    case ARejection::separability: ++stats->rejected_separability; break;
    case ARejection::degenerate: ++stats->rejected_degenerate; break;
    case ARejection::content: ++stats->rejected_content; break;
    case ARejection::irreducible: ++stats->rejected_irreducible; break;
    case ARejection::square: ++stats->rejected_square; break;
    case ARejection::none: break;
  }
}

}  // namespace

SelectAResult select_a(const SchinzelParams& params, const std::vector<BigInt>* override_a) {
  if (params.n < 2) throw input_error("need n >= 2");
  if (params.base.d != 1)
    throw input_error("only the rational base (d = 1) is supported; see --help for limits");
  auto [c, big_p] = build_c_and_p(params.n, params.base.d);

  SelectAResult result;
  if (override_a) {
    if (static_cast<int>(override_a->size()) != params.n)
      throw input_error("override coefficient vector must have length n");
    result.stats.examined = 1;
    ARejection rej = check_a(params.n, c, big_p, *override_a, &result.h);
    if (rej != ARejection::none) {
      count_rejection(&result.stats, rej);
      throw input_error(std::string("override coefficients rejected: ") + rejection_name(rej));
    }
    result.a = *override_a;
    return result;
  }

  const int n = params.n;
  const int box = params.a_box;
  std::vector<int> mag(static_cast<size_t>(n), 0);
  while (true) {
    // All sign patterns for the current magnitude vector, + before -.
    std::vector<size_t> nonzero;
    for (size_t i = 0; i < mag.size(); ++i)
      if (mag[i] != 0) nonzero.push_back(i);
    const unsigned long patterns = 1UL << nonzero.size();
    for (unsigned long bits = 0; bits < patterns; ++bits) {
      std::vector<BigInt> a(static_cast<size_t>(n));
      for (size_t i = 0; i < mag.size(); ++i) a[i] = mag[i];
      for (size_t j = 0; j < nonzero.size(); ++j)
        if (bits & (1UL << (nonzero.size() - 1 - j))) a[nonzero[j]] = -a[nonzero[j]];
      ++result.stats.examined;
      ARejection rej = check_a(n, c, big_p, a, &result.h);
      if (rej == ARejection::none) {
        result.a = std::move(a);
        return result;
      }
      count_rejection(&result.stats, rej);
    }
    // Next magnitude vector in lexicographic order, last coordinate fastest.
    int pos = n - 1;
    while (pos >= 0 && mag[static_cast<size_t>(pos)] == box) {
      mag[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++mag[static_cast<size_t>(pos)];
  }
  throw not_found_error("coefficient box exhausted for n = " + std::to_string(n) + ": " +
                        result.stats.describe());
}

namespace {

struct TCandidate {
  BigInt h_value;
  Primality h_primality = Primality::composite;
  PolyZ f;
  std::optional<GaloisCertificate> galois;
  std::optional<RamificationReport> ramification;
  enum class Fail { none, nonprime, galois, real, ramification } fail = Fail::none;
};

TCandidate evaluate_t(const SchinzelParams& params, const PolyZT& f_sym, const PolyZ& h,
                      const BigInt& t) {
  TCandidate cand;
  cand.h_value = h.eval(t);
  // Specialize T -> t.
  std::vector<BigInt> coeffs;
  coeffs.reserve(f_sym.coeffs().size());
  for (const PolyZ& ci : f_sym.coeffs()) coeffs.push_back(ci.eval(t));
  cand.f = PolyZ(std::move(coeffs));

  BigInt h_abs = abs_int(cand.h_value);
  if (h_abs <= 1) {
    cand.fail = TCandidate::Fail::nonprime;
    return cand;
  }
  cand.h_primality = classify_prime(h_abs);
  if (cand.h_primality == Primality::composite ||
      (params.require_proven && cand.h_primality != Primality::prime)) {
    cand.fail = TCandidate::Fail::nonprime;
    return cand;
  }

  // Hard invariant: the specialized discriminant equals H(a, t).
  if (discriminant(cand.f) != cand.h_value)
    throw verification_error("disc of specialization disagrees with H(a,t)");

  cand.galois = galois_certify(cand.f, params.seed, params.prime_budget);
  if (cand.galois->status != GaloisStatus::certified_sn) {
    cand.fail = TCandidate::Fail::galois;
    return cand;
  }
  if (!has_all_real_roots(cand.f)) {
    cand.fail = TCandidate::Fail::real;
    return cand;
  }
  cand.ramification = ramified_primes(cand.f);
  bool single = cand.ramification->finite.size() == 1 &&
                cand.ramification->finite[0].status == PlaceStatus::ramified &&
                cand.ramification->finite[0].prime == h_abs;
  if (!single) {
    cand.fail = TCandidate::Fail::ramification;
    return cand;
  }
  return cand;
}

}  // namespace

SchinzelInstance schinzel_search(const SchinzelParams& params,
                                 const std::vector<BigInt>* override_a,
                                 const HilbertModulus* modulus) {
  SelectAResult sel = select_a(params, override_a);
  auto [c, big_p] = build_c_and_p(params.n, params.base.d);
  PolyZT f_sym = build_f(params.n, sel.a);

  // Candidate t values in ascending order, honoring the congruence classes.
  std::vector<BigInt> residues{BigInt(0)};
  BigInt v = 1;
  if (modulus && modulus->v > 1) {
    v = modulus->v;
    residues = modulus->residues;
    std::sort(residues.begin(), residues.end());
  }
  auto admissible = [&](long t) {
    if (v == 1) return true;
    BigInt r = mod_floor(BigInt(t), v);
    return std::binary_search(residues.begin(), residues.end(), r);
  };

  TScanStats stats;
  const int threads = std::max(1, params.threads);
  const long chunk = 16;
  long next = params.t_min;
  while (next <= params.t_max) {
    // One deterministic wave: a fixed block of candidates, evaluated in
    // parallel, then resolved in ascending order.
    std::vector<long> wave;
    while (next <= params.t_max && static_cast<long>(wave.size()) < threads * chunk) {
      if (admissible(next)) wave.push_back(next);
      ++next;
    }
    if (wave.empty()) continue;
    std::vector<TCandidate> results(wave.size());
    if (threads == 1) {
      for (size_t i = 0; i < wave.size(); ++i)
        results[i] = evaluate_t(params, f_sym, sel.h, BigInt(wave[i]));
    } else {
      std::atomic<size_t> cursor{0};
      std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
      std::vector<std::thread> pool;
      for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
          try {
            for (size_t i = cursor.fetch_add(1); i < wave.size(); i = cursor.fetch_add(1))
              results[i] = evaluate_t(params, f_sym, sel.h, BigInt(wave[i]));
          } catch (...) {
            errors[static_cast<size_t>(w)] = std::current_exception();
          }
        });
      for (auto& th : pool) th.join();
      for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    }
    for (size_t i = 0; i < wave.size(); ++i) {
      ++stats.examined;
      switch (results[i].fail) {
        case TCandidate::Fail::nonprime: ++stats.rejected_nonprime; continue;
        case TCandidate::Fail::galois: ++stats.rejected_galois; continue;
        case TCandidate::Fail::real: ++stats.rejected_real; continue;
        case TCandidate::Fail::ramification: ++stats.rejected_ramification; continue;
        case TCandidate::Fail::none: break;
      }
      SchinzelInstance inst;
      inst.n = params.n;
      inst.a = sel.a;
      inst.t = wave[i];
      inst.f = std::move(results[i].f);
      inst.h_value = std::move(results[i].h_value);
      inst.h_primality = results[i].h_primality;
      inst.c = c;
      inst.big_p = big_p;
      inst.galois = std::move(*results[i].galois);
      inst.ramification = std::move(*results[i].ramification);
      if (modulus && modulus->v > 1) {
        inst.mod_v = modulus->v;
        inst.mod_u = mod_floor(inst.t, modulus->v);
      }
      inst.select_stats = sel.stats;
      inst.scan_stats = stats;
      return inst;
    }
  }
  throw not_found_error("t scan exhausted for n = " + std::to_string(params.n) + " in [" +
                        std::to_string(params.t_min) + ", " + std::to_string(params.t_max) +
                        "]: " + stats.describe());
}

HilbertModulus hilbert_modulus(const SchinzelParams& params, const PolyZ& h,
                               const std::vector<BigInt>& a,
                               const std::vector<long>& v_candidates, int samples) {
  PolyZT f_sym = build_f(params.n, a);
  for (long vc : v_candidates) {
    if (vc < 1) throw input_error("modulus candidates must be positive");
    if (vc == 1) return HilbertModulus{BigInt(1), {BigInt(0)}, 0};
    BigInt v(vc);
    // Squarefree check by trial division.
    bool squarefree = true;
    BigInt rest = v;
    for (std::uint32_t p : small_primes()) {
      BigInt bp(p);
      if (bp * bp > rest) break;
      if (rest % bp == 0) {
        rest /= bp;
        if (rest % bp == 0) {
          squarefree = false;
          break;
        }
      }
    }
    if (!squarefree) continue;

    HilbertModulus mod;
    mod.v = v;
    mod.samples_per_residue = samples;
    for (long u = 1; u < vc; ++u) {
      if (gcd(BigInt(u), v) != 1) continue;
      if (mod_floor(h.eval(BigInt(u)), v) == 0) continue;
      bool keeps_sn = true;
      for (int s = 0; s < samples && keeps_sn; ++s) {
        BigInt t = BigInt(u) + BigInt(s) * v;
        if (t < params.t_min) t += v;
        std::vector<BigInt> coeffs;
        for (const PolyZ& ci : f_sym.coeffs()) coeffs.push_back(ci.eval(t));
        PolyZ ft(std::move(coeffs));
        if (discriminant(ft) == 0) continue;  // skip degenerate sample points
        GaloisCertificate cert = galois_certify(ft, params.seed, params.prime_budget);
        if (cert.status == GaloisStatus::not_sn) keeps_sn = false;
      }
      if (keeps_sn) mod.residues.push_back(BigInt(u));
    }
    if (!mod.residues.empty()) return mod;
  }
  throw not_found_error("no candidate modulus admits a nonempty residue set");
}

}  // namespace minram
