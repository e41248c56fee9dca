#include "minram/sturm.hpp"

#include <vector>

#include "minram/errors.hpp"

namespace minram {

namespace {

std::vector<PolyQ> sturm_chain(const PolyQ& g) {
  std::vector<PolyQ> chain;
  chain.push_back(g);
  if (g.degree() >= 1) chain.push_back(g.derivative());
  while (chain.back().degree() >= 1) {
    PolyQ r = rem_field(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;  // cannot happen for squarefree g
    chain.push_back(-r);
  }
  return chain;
}

int sign_at(const PolyQ& p, const BigRat& x) { return sign(p.eval(x)); }

// Sign at -infinity (dir < 0) or +infinity (dir > 0).
int sign_at_infinity(const PolyQ& p, int dir) {
  if (p.is_zero()) return 0;
  int s = sign(p.lc());
  if (dir < 0 && p.degree() % 2 == 1) s = -s;
  return s;
}

template <class SignFn>
int variations(const std::vector<PolyQ>& chain, SignFn&& sgn) {
  int count = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sgn(p);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

PolyQ to_rational(const PolyZ& f) {
  return f.map<BigRat>([](const BigInt& c) { return BigRat(c); });
}

// Squarefree part f / gcd(f, f'), monic over Q.
PolyQ squarefree_part(const PolyQ& f) {
  PolyQ g = gcd_field(f, f.derivative());
  if (g.degree() == 0) return make_monic(f);
  return make_monic(divmod_field(f, g).first);
}

}  // namespace

RealRootSummary real_root_summary(const PolyZ& f) {
  if (f.is_zero()) throw input_error("real roots of the zero polynomial");
  RealRootSummary out;
  if (f.degree() == 0) {
    out.squarefree = true;
    return out;
  }
  PolyQ fq = to_rational(f);
  PolyQ g = squarefree_part(fq);
  out.squarefree_degree = g.degree();
  out.squarefree = g.degree() == f.degree();
  auto chain = sturm_chain(g);
  int at_minus = variations(chain, [](const PolyQ& p) { return sign_at_infinity(p, -1); });
  int at_plus = variations(chain, [](const PolyQ& p) { return sign_at_infinity(p, +1); });
  out.distinct_real_roots = at_minus - at_plus;
  return out;
}

int count_real_roots(const PolyZ& f) { return real_root_summary(f).distinct_real_roots; }

int count_real_roots_in(const PolyZ& f, const BigRat& a, const BigRat& b) {
  if (f.is_zero()) throw input_error("real roots of the zero polynomial");
  if (!(a < b)) throw input_error("empty interval");
  if (f.degree() == 0) return 0;
  PolyQ g = squarefree_part(to_rational(f));
  auto chain = sturm_chain(g);
  int va = variations(chain, [&](const PolyQ& p) { return sign_at(p, a); });
  int vb = variations(chain, [&](const PolyQ& p) { return sign_at(p, b); });
  return va - vb;
}

bool has_all_real_roots(const PolyZ& f) {
  auto s = real_root_summary(f);
  return s.squarefree && s.distinct_real_roots == f.degree();
}

std::pair<int, int> signature(const PolyZ& f) {
  auto s = real_root_summary(f);
  if (!s.squarefree) throw input_error("signature needs a squarefree polynomial");
  int r1 = s.distinct_real_roots;
  return {r1, (f.degree() - r1) / 2};
}

}  // namespace minram
