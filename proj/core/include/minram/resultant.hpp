#pragma once

#include "minram/poly.hpp"

namespace minram {

// Resultant over an integral domain via the subresultant PRS. Sign convention
// matches the Sylvester determinant: res(a, b) = lc(a)^deg(b) * prod b(alpha_i)
// over the roots of a, and res(a, b) = (-1)^(deg a * deg b) res(b, a).
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
  if (a.is_zero() && b.is_zero()) throw input_error("resultant of two zero polynomials");
  if (a.is_zero() || b.is_zero()) {
    const R& sample = a.is_zero() ? b.lc() : a.lc();
    // res(c, 0) = 0 for deg >= 1 by the common-root criterion; constants give
    // the empty determinant.
    if ((a.is_zero() ? b : a).degree() == 0) return ring_ops<R>::one_like(sample);
    return ring_ops<R>::zero_like(sample);
  }
  int sign = 1;
  if (a.degree() < b.degree()) {
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    std::swap(a, b);
  }
  const R one = ring_ops<R>::one_like(a.lc());
  if (b.degree() == 0) {
    // res(a, c) = c^deg(a)
    R r = one;
    for (int i = 0; i < a.degree(); ++i) r = r * b.lc();
    return sign < 0 ? ring_ops<R>::mul_int(r, -1) : r;
  }
  R g = one;
  R h = one;
  while (true) {
    int da = a.degree();
    int db = b.degree();
    int delta = da - db;
    if (da % 2 == 1 && db % 2 == 1) sign = -sign;
    Poly<R> r = a.prem(b);
    if (r.is_zero()) {
      // Positive-degree common factor: resultant vanishes.
      return ring_ops<R>::zero_like(one);
    }
    // b <- r / (g * h^delta)
    R divisor = g;
    for (int i = 0; i < delta; ++i) divisor = divisor * h;
    a = std::move(b);
    b = r.divexact_scalar(divisor);
    g = a.lc();
    // h <- g^delta * h^(1-delta), exactly in R
    if (delta == 0) {
      // h unchanged
    } else {
      R num = one;
      for (int i = 0; i < delta; ++i) num = num * g;
      R den = one;
      for (int i = 0; i < delta - 1; ++i) den = den * h;
      h = ring_ops<R>::exact_div(num, den);
    }
    if (b.degree() == 0) {
      // res = sign * B^deg(a) / h^(deg(a)-1)
      int d = a.degree();
      R num = one;
      for (int i = 0; i < d; ++i) num = num * b.lc();
      R den = one;
      for (int i = 0; i < d - 1; ++i) den = den * h;
      R res = ring_ops<R>::exact_div(num, den);
      return sign < 0 ? ring_ops<R>::mul_int(res, -1) : res;
    }
  }
}

// disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f). Defined for deg f >= 1;
// deg 1 gives 1.
template <class R>
R discriminant(const Poly<R>& f) {
  if (f.degree() < 1) throw input_error("discriminant needs degree >= 1");
  const int n = f.degree();
  if (n == 1) return ring_ops<R>::one_like(f.lc());
  R res = resultant(f, f.derivative());
  R d = ring_ops<R>::exact_div(res, f.lc());
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) d = ring_ops<R>::mul_int(d, -1);
  return d;
}

}  // namespace minram
