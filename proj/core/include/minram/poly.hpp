#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "minram/bigint.hpp"
#include "minram/errors.hpp"

namespace minram {

// Ring hooks used by Poly<R>. Elements may carry a context (e.g. a modulus),
// so zero/one are derived from a sample element rather than default-built.
template <class R>
struct ring_ops {
  static R zero_like(const R&) { return R(0); }
  static R one_like(const R&) { return R(1); }
  static bool is_zero(const R& a) { return a == 0; }
  static R mul_int(const R& a, long k) { return a * k; }
  static R exact_div(const R& a, const R& b);
};

template <>
inline BigInt ring_ops<BigInt>::exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw error("exact_div by zero");
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw error("exact_div: not divisible");
  return q;
}

template <>
inline BigRat ring_ops<BigRat>::exact_div(const BigRat& a, const BigRat& b) {
  if (b == 0) throw error("exact_div by zero");
  return a / b;
}

// Dense univariate polynomial over R, coefficients lowest-degree first,
// normalized to have no trailing zero coefficient (zero poly = empty vector).
template <class R>
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Poly zero() { return Poly(); }
  static Poly constant(R v) { return Poly(std::vector<R>{std::move(v)}); }
  static Poly monomial(R coeff, int deg) {
    if (ring_ops<R>::is_zero(coeff)) return Poly();
    std::vector<R> c;
    c.reserve(deg + 1);
    for (int i = 0; i < deg; ++i) c.push_back(ring_ops<R>::zero_like(coeff));
    c.push_back(std::move(coeff));
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<R>& coeffs() const { return c_; }

  const R& lc() const {
    if (c_.empty()) throw error("leading coefficient of zero polynomial");
    return c_.back();
  }

  // Coefficient of X^i, or zero when i exceeds the degree. Needs a nonzero
  // polynomial to supply the ring context.
  R coeff(int i) const {
    if (i >= 0 && i < static_cast<int>(c_.size())) return c_[i];
    if (c_.empty()) throw error("coeff of zero polynomial needs context");
    return ring_ops<R>::zero_like(c_[0]);
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<R> c = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const std::vector<R>& s = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    for (std::size_t i = 0; i < s.size(); ++i) c[i] = c[i] + s[i];
    return Poly(std::move(c));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  Poly operator-() const {
    std::vector<R> c = c_;
    for (auto& x : c) x = ring_ops<R>::mul_int(x, -1);
    return Poly(std::move(c));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> c;
    c.reserve(a.c_.size() + b.c_.size() - 1);
    const R z = ring_ops<R>::zero_like(a.c_[0]);
    c.assign(a.c_.size() + b.c_.size() - 1, z);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }

  Poly scaled(const R& s) const {
    if (ring_ops<R>::is_zero(s)) return Poly();
    std::vector<R> c = c_;
    for (auto& x : c) x = x * s;
    return Poly(std::move(c));
  }

  // Divide every coefficient by s; each division must be exact in R.
  Poly divexact_scalar(const R& s) const {
    std::vector<R> c = c_;
    for (auto& x : c) x = ring_ops<R>::exact_div(x, s);
    return Poly(std::move(c));
  }

  bool operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  R eval(const R& x) const {
    if (c_.empty()) return ring_ops<R>::zero_like(x);
    R acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> c;
    c.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      c.push_back(ring_ops<R>::mul_int(c_[i], static_cast<long>(i)));
    return Poly(std::move(c));
  }

  template <class S, class Fn>
  Poly<S> map(Fn&& fn) const {
    std::vector<S> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(fn(x));
    return Poly<S>(std::move(c));
  }

  // X -> X + a
  Poly shifted(const R& a) const {
    Poly result;
    Poly x_plus_a(std::vector<R>{a, ring_ops<R>::one_like(a)});
    for (std::size_t i = c_.size(); i-- > 0;) result = result * x_plus_a + constant(c_[i]);
    return result;
  }

  // Pseudo-remainder: lc(d)^(deg(*this)-deg(d)+1) * this = q*d + r, deg r < deg d.
  // For deg(*this) < deg(d) returns *this unchanged.
  Poly prem(const Poly& d) const {
    if (d.is_zero()) throw error("pseudo-division by zero");
    Poly r = *this;
    const int dd = d.degree();
    int e = r.degree() - dd + 1;
    const R& lcd = d.lc();
    while (!r.is_zero() && r.degree() >= dd) {
      int k = r.degree() - dd;
      Poly t = d.scaled(r.lc());
      // r <- lc(d)*r - X^k * lc(r)*d
      r = r.scaled(lcd) - shift_up(t, k);
      --e;
    }
    // Pad remaining multiplier so the result matches lc(d)^(delta+1) * this mod d.
    while (e-- > 0) r = r.scaled(lcd);
    return r;
  }

  // Exact polynomial division over a UFD: requires d | *this, else throws.
  Poly exact_div_poly(const Poly& d) const {
    if (d.is_zero()) throw error("exact polynomial division by zero");
    if (is_zero()) return Poly();
    if (degree() < d.degree()) throw error("exact division: degree mismatch");
    Poly r = *this;
    std::vector<R> q(degree() - d.degree() + 1, ring_ops<R>::zero_like(c_[0]));
    while (!r.is_zero() && r.degree() >= d.degree()) {
      int k = r.degree() - d.degree();
      R qc = ring_ops<R>::exact_div(r.lc(), d.lc());
      q[k] = qc;
      r = r - shift_up(d.scaled(qc), k);
    }
    if (!r.is_zero()) throw error("exact division: nonzero remainder");
    return Poly(std::move(q));
  }

  static Poly shift_up(const Poly& p, int k) {
    if (p.is_zero() || k == 0) return p;
    std::vector<R> c;
    c.reserve(p.c_.size() + k);
    for (int i = 0; i < k; ++i) c.push_back(ring_ops<R>::zero_like(p.c_[0]));
    for (const auto& x : p.c_) c.push_back(x);
    return Poly(std::move(c));
  }

private:
  void normalize() {
    while (!c_.empty() && ring_ops<R>::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

// Nested polynomials form the coefficient ring for bivariate work.
template <class R>
struct ring_ops<Poly<R>> {
  static Poly<R> zero_like(const Poly<R>&) { return Poly<R>(); }
  static Poly<R> one_like(const Poly<R>& a) {
    if (a.is_zero()) throw error("one_like needs a nonzero sample polynomial");
    return Poly<R>::constant(ring_ops<R>::one_like(a.coeffs()[0]));
  }
  static bool is_zero(const Poly<R>& a) { return a.is_zero(); }
  static Poly<R> mul_int(const Poly<R>& a, long k) {
    return a.template map<R>([&](const R& x) { return ring_ops<R>::mul_int(x, k); });
  }
  static Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) { return a.exact_div_poly(b); }
};

using PolyZ = Poly<BigInt>;
using PolyQ = Poly<BigRat>;
using PolyZT = Poly<Poly<BigInt>>;  // X-polynomial with Z[T] coefficients

inline PolyZ poly_from_ints(std::vector<long> v) {
  std::vector<BigInt> c;
  c.reserve(v.size());
  for (long x : v) c.emplace_back(x);
  return PolyZ(std::move(c));
}

// Field hooks for divmod/gcd over field coefficients.
template <class F>
struct field_ops {
  static F inv(const F& a);
};

template <>
inline BigRat field_ops<BigRat>::inv(const BigRat& a) {
  if (a == 0) throw error("inverse of zero");
  return 1 / a;
}

template <class F>
std::pair<Poly<F>, Poly<F>> divmod_field(const Poly<F>& a, const Poly<F>& d) {
  if (d.is_zero()) throw error("division by zero polynomial");
  if (a.is_zero() || a.degree() < d.degree()) return {Poly<F>(), a};
  const F inv_lc = field_ops<F>::inv(d.lc());
  Poly<F> r = a;
  std::vector<F> q(a.degree() - d.degree() + 1, ring_ops<F>::zero_like(a.lc()));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    F qc = r.lc() * inv_lc;
    q[k] = qc;
    r = r - Poly<F>::shift_up(d.scaled(qc), k);
  }
  return {Poly<F>(std::move(q)), r};
}

template <class F>
Poly<F> rem_field(const Poly<F>& a, const Poly<F>& d) {
  return divmod_field(a, d).second;
}

template <class F>
Poly<F> make_monic(const Poly<F>& f) {
  if (f.is_zero()) return f;
  return f.scaled(field_ops<F>::inv(f.lc()));
}

template <class F>
Poly<F> gcd_field(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = rem_field(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

template <class F>
Poly<F> powmod_poly(const Poly<F>& base, const BigInt& e, const Poly<F>& mod) {
  if (e < 0) throw error("negative exponent");
  Poly<F> result = Poly<F>::constant(ring_ops<F>::one_like(mod.lc()));
  Poly<F> b = rem_field(base, mod);
  for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)); i-- > 0;) {
    result = rem_field(result * result, mod);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) result = rem_field(result * b, mod);
  }
  return result;
}

// Integer-polynomial content (positive) and primitive part; sign stays on the
// primitive part.
inline std::pair<BigInt, PolyZ> content_and_primitive(const PolyZ& f) {
  if (f.is_zero()) throw input_error("content of zero polynomial");
  BigInt g = 0;
  for (const auto& c : f.coeffs()) g = gcd(g, c);
  return {g, f.divexact_scalar(g)};
}

std::string poly_to_string(const PolyZ& f, const std::string& var = "X");
std::string poly_to_string(const PolyZT& f, const std::string& outer = "X",
                           const std::string& inner = "T");

inline std::string poly_term_to_string(const BigInt& c, int i, const std::string& var,
                                       bool first) {
  std::string s;
  BigInt a = c;
  if (first) {
    if (a < 0) {
      s += "-";
      a = -a;
    }
  } else {
    s += a < 0 ? " - " : " + ";
    if (a < 0) a = -a;
  }
  if (i == 0 || a != 1) s += to_string(a);
  if (i > 0) {
    if (a != 1) s += "*";
    s += var;
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

inline std::string poly_to_string_impl(const PolyZ& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const BigInt& c = f.coeffs()[i];
    if (c == 0) continue;
    s += poly_term_to_string(c, i, var, first);
    first = false;
  }
  return s;
}

inline std::string poly_to_string(const PolyZ& f, const std::string& var) {
  return poly_to_string_impl(f, var);
}

inline std::string poly_to_string(const PolyZT& f, const std::string& outer,
                                  const std::string& inner) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const PolyZ& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    if (!first) s += " + ";
    std::string cs = poly_to_string_impl(c, inner);
    if (i == 0) {
      s += cs;
    } else {
      if (c.degree() > 0 || !(c == PolyZ::constant(BigInt(1)))) s += "(" + cs + ")*";
      s += outer;
      if (i > 1) s += "^" + std::to_string(i);
    }
    first = false;
  }
  return s;
}

}  // namespace minram
