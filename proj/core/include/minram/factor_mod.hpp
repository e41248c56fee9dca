#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "minram/finite_field.hpp"
#include "minram/poly.hpp"

namespace minram {

template <class F>
struct ModFactor {
  Poly<F> factor;  // monic irreducible
  int multiplicity = 0;
};

// Canonical integer index of a field element, used only for ordering.
inline BigInt index_of(const Fp& a) { return a.value(); }
inline BigInt index_of(const FqElem& a) { return a.to_index(); }

namespace detail {

// Uniform-enough index in [0, q), built from 64-bit draws. Handles q beyond
// 64 bits; slight modular bias is irrelevant for the randomized splittings.
inline BigInt random_index(std::mt19937_64& rng, const BigInt& q) {
  std::size_t bits = mpz_sizeinbase(q.get_mpz_t(), 2) + 64;
  BigInt acc = 0;
  for (std::size_t have = 0; have < bits; have += 64) {
    acc <<= 64;
    acc += BigInt(static_cast<unsigned long>(rng()));
  }
  return mod_floor(acc, q);
}

template <class F>
Poly<F> random_poly_below(std::mt19937_64& rng, int deg_bound, const F& sample) {
  std::vector<F> c;
  c.reserve(deg_bound);
  const BigInt q = field_info<F>::order(sample);
  for (int i = 0; i < deg_bound; ++i) c.push_back(field_info<F>::from_index(random_index(rng, q), sample));
  return Poly<F>(std::move(c));
}

// Multiplicity-p part handling: c(X) with only X^(jp) terms equals g(X)^p
// where g takes the p-th roots of the coefficients, a^(q/p).
template <class F>
Poly<F> pth_root(const Poly<F>& c, long p) {
  const F sample = c.lc();
  const BigInt q = field_info<F>::order(sample);
  const BigInt e = q / BigInt(p);
  std::vector<F> out;
  for (int j = 0; j * p <= c.degree(); ++j) {
    F a = c.coeff(static_cast<int>(j * p));
    out.push_back(a.pow(e));
  }
  return Poly<F>(std::move(out));
}

template <class F>
long small_characteristic(const F& sample) {
  const BigInt p = field_info<F>::characteristic(sample);
  if (!p.fits_slong_p()) throw error("inseparable part with oversized characteristic");
  return p.get_si();
}

template <class F>
void squarefree_decompose(const Poly<F>& f, int mult, std::vector<std::pair<Poly<F>, int>>& out) {
  Poly<F> fp = f.derivative();
  if (fp.is_zero()) {
    const long p = small_characteristic(f.lc());
    squarefree_decompose(pth_root(f, p), mult * static_cast<int>(p), out);
    return;
  }
  Poly<F> c = gcd_field(f, fp);
  Poly<F> w = divmod_field(f, c).first;
  int i = 1;
  while (w.degree() > 0) {
    Poly<F> y = gcd_field(w, c);
    Poly<F> fac = divmod_field(w, y).first;
    if (fac.degree() > 0) out.emplace_back(fac, mult * i);
    w = std::move(y);
    c = divmod_field(c, w).first;
    ++i;
  }
  if (c.degree() > 0) {
    const long p = small_characteristic(f.lc());
    squarefree_decompose(pth_root(c, p), mult * static_cast<int>(p), out);
  }
}

// Distinct-degree split of squarefree monic g: pairs (product, degree).
template <class F>
std::vector<std::pair<Poly<F>, int>> distinct_degree(Poly<F> g) {
  std::vector<std::pair<Poly<F>, int>> out;
  const F one = ring_ops<F>::one_like(g.lc());
  const F zero = ring_ops<F>::zero_like(g.lc());
  const BigInt q = field_info<F>::order(g.lc());
  Poly<F> x(std::vector<F>{zero, one});
  Poly<F> h = rem_field(x, g);
  int d = 0;
  while (g.degree() > 2 * d) {
    ++d;
    h = powmod_poly(h, q, g);
    Poly<F> gd = gcd_field(h - x, g);
    if (gd.degree() > 0) {
      out.emplace_back(gd, d);
      g = divmod_field(g, gd).first;
      h = rem_field(h, g);
    }
  }
  if (g.degree() > 0) out.emplace_back(g, g.degree());
  return out;
}

// Cantor-Zassenhaus equal-degree split of a product of irreducibles of
// degree d.
template <class F>
void equal_degree(const Poly<F>& f, int d, std::mt19937_64& rng, std::vector<Poly<F>>& out) {
  if (f.degree() == d) {
    out.push_back(make_monic(f));
    return;
  }
  const F one = ring_ops<F>::one_like(f.lc());
  const BigInt q = field_info<F>::order(f.lc());
  const BigInt p = field_info<F>::characteristic(f.lc());
  Poly<F> g;
  while (true) {
    Poly<F> a = random_poly_below(rng, f.degree(), f.lc());
    if (a.degree() < 1) continue;
    if (p == 2) {
      // Trace over F_2 of degree-d Frobenius orbits: sum of a^(2^i).
      long k = 0;
      BigInt t = q;
      while (t > 1) {
        t /= 2;
        ++k;
      }
      Poly<F> tr;
      Poly<F> cur = rem_field(a, f);
      for (long i = 0; i < k * d; ++i) {
        tr = tr + cur;
        cur = rem_field(cur * cur, f);
      }
      g = gcd_field(tr, f);
    } else {
      BigInt e = (pow_ui(q, static_cast<unsigned long>(d)) - 1) / 2;
      Poly<F> b = powmod_poly(a, e, f);
      g = gcd_field(b - Poly<F>::constant(one), f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) break;
  }
  equal_degree(g, d, rng, out);
  equal_degree(divmod_field(f, g).first, d, rng, out);
}

}  // namespace detail

// Full factorization into monic irreducibles with multiplicities, sorted by
// (degree, coefficient order) for deterministic output. The leading
// coefficient of f is dropped; callers needing it keep lc(f).
template <class F>
std::vector<ModFactor<F>> factor_poly_mod(const Poly<F>& f, std::uint64_t seed = 0x9e3779b97f4a7c15ULL) {
  if (f.is_zero()) throw input_error("factor of zero polynomial");
  if (f.degree() == 0) return {};
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Poly<F>, int>> sqf;
  detail::squarefree_decompose(make_monic(f), 1, sqf);
  std::vector<ModFactor<F>> out;
  for (auto& [part, mult] : sqf) {
    for (auto& [prod, d] : detail::distinct_degree(std::move(part))) {
      std::vector<Poly<F>> irr;
      detail::equal_degree(prod, d, rng, irr);
      for (auto& h : irr) out.push_back(ModFactor<F>{std::move(h), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const ModFactor<F>& a, const ModFactor<F>& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    for (int i = a.factor.degree(); i >= 0; --i) {
      const BigInt ai = index_of(a.factor.coeffs()[i]);
      const BigInt bi = index_of(b.factor.coeffs()[i]);
      if (ai != bi) return ai < bi;
    }
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

// Degrees of the irreducible factors of a squarefree polynomial, descending.
// This is the Frobenius cycle type when f is squarefree mod p.
template <class F>
std::vector<int> factor_degrees(const Poly<F>& f, std::uint64_t seed = 0x9e3779b97f4a7c15ULL) {
  std::vector<int> degs;
  for (const auto& mf : factor_poly_mod(f, seed))
    for (int i = 0; i < mf.multiplicity; ++i) degs.push_back(mf.factor.degree());
  std::sort(degs.rbegin(), degs.rend());
  return degs;
}

template <class F>
bool is_squarefree_mod(const Poly<F>& f) {
  if (f.degree() < 1) return true;
  Poly<F> fp = f.derivative();
  if (fp.is_zero()) return false;
  return gcd_field(f, fp).degree() == 0;
}

}  // namespace minram
