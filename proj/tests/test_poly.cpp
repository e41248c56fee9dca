#include <random>
#include <vector>

#include "doctest.h"
#include "minram/errors.hpp"
#include "minram/irreducibility.hpp"
#include "minram/poly.hpp"
#include "minram/resultant.hpp"
#include "minram/sturm.hpp"

using namespace minram;

namespace {

// Sylvester-matrix resultant via fraction-free Gaussian elimination, as an
// independent reference for the subresultant implementation.
BigInt sylvester_resultant(const PolyZ& a, const PolyZ& b) {
  const int m = a.degree();
  const int n = b.degree();
  REQUIRE(m >= 0);
  REQUIRE(n >= 0);
  if (m == 0 && n == 0) return 1;
  const int size = m + n;
  std::vector<std::vector<BigRat>> s(size, std::vector<BigRat>(size, BigRat(0)));
  for (int row = 0; row < n; ++row)
    for (int j = 0; j <= m; ++j) s[row][row + j] = BigRat(a.coeff(m - j));
  for (int row = 0; row < m; ++row)
    for (int j = 0; j <= n; ++j) s[n + row][row + j] = BigRat(b.coeff(n - j));

  BigRat det(1);
  for (int col = 0; col < size; ++col) {
    int pivot = -1;
    for (int row = col; row < size; ++row)
      if (s[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(s[pivot], s[col]);
      det = -det;
    }
    det *= s[col][col];
    for (int row = col + 1; row < size; ++row) {
      BigRat factor = s[row][col] / s[col][col];
      for (int j = col; j < size; ++j) s[row][j] -= factor * s[col][j];
    }
  }
  det.canonicalize();
  REQUIRE(det.get_den() == 1);
  return det.get_num();
}

PolyZ random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::vector<BigInt> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(coeff(rng));
  c.emplace_back(1 + std::uniform_int_distribution<int>(0, 8)(rng));
  return PolyZ(c);
}

}  // namespace

TEST_CASE("polynomial arithmetic identities") {
  PolyZ f = poly_from_ints({28, -15, 1});  // X^2 - 15X + 28
  PolyZ g = poly_from_ints({-2, 0, 0, 1}); // X^3 - 2
  CHECK(f.degree() == 2);
  CHECK((f * g).degree() == 5);
  CHECK(f + g - g == f);
  CHECK(f.eval(BigInt(4)) == -16);
  CHECK(f.eval(BigInt(0)) == 28);
  CHECK(g.derivative() == poly_from_ints({0, 0, 3}));
  CHECK(PolyZ().is_zero());
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937_64 rng(20260814);
  for (int trial = 0; trial < 30; ++trial) {
    PolyZ a = random_poly(rng, 1 + static_cast<int>(rng() % 5));
    PolyZ b = random_poly(rng, 1 + static_cast<int>(rng() % 5));
    CHECK(resultant(a, b) == sylvester_resultant(a, b));
  }
  // Swapping arguments flips the sign by (-1)^(deg a * deg b).
  PolyZ a = poly_from_ints({1, 3, 0, 2});
  PolyZ b = poly_from_ints({-4, 1, 5});
  BigInt sign = (a.degree() * b.degree()) % 2 == 0 ? 1 : -1;
  CHECK(resultant(a, b) == sign * resultant(b, a));
}

TEST_CASE("discriminant values and multiplicativity") {
  CHECK(discriminant(poly_from_ints({28, -15, 1})) == 113);
  CHECK(discriminant(poly_from_ints({-2, 0, 0, 1})) == -108);
  CHECK(discriminant(poly_from_ints({1, 0, 0, 0, 1})) == 256);  // X^4 + 1
  CHECK(discriminant(poly_from_ints({-1, -1, 0, 0, 0, 1})) == 2869);  // X^5 - X - 1

  // disc(fg) = disc(f) disc(g) Res(f, g)^2 for monic f, g.
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<BigInt> ca, cb;
    for (int i = 0; i < 2; ++i) ca.emplace_back(static_cast<long>(rng() % 19) - 9);
    for (int i = 0; i < 3; ++i) cb.emplace_back(static_cast<long>(rng() % 19) - 9);
    ca.emplace_back(1);
    cb.emplace_back(1);
    PolyZ f{ca}, g{cb};
    BigInt res = resultant(f, g);
    if (res == 0) continue;
    CHECK(discriminant(f * g) == discriminant(f) * discriminant(g) * res * res);
  }

  CHECK_THROWS_AS(discriminant(PolyZ::constant(BigInt(5))), input_error);
}

TEST_CASE("sturm real-root counts") {
  CHECK(count_real_roots(poly_from_ints({28, -15, 1})) == 2);
  CHECK(count_real_roots(poly_from_ints({1, 0, 1})) == 0);   // X^2 + 1
  CHECK(count_real_roots(poly_from_ints({-2, 0, 0, 1})) == 1);
  CHECK(count_real_roots(poly_from_ints({-1, -1, 0, 0, 0, 1})) == 1);
  // (X^2 - 2)(X^2 - 3) has four real roots.
  PolyZ f = poly_from_ints({-2, 0, 1}) * poly_from_ints({-3, 0, 1});
  CHECK(count_real_roots(f) == 4);
  CHECK(has_all_real_roots(f));
  CHECK_FALSE(has_all_real_roots(poly_from_ints({1, 0, 1})));
  CHECK(count_real_roots_in(f, BigRat(0), BigRat(2)) == 2);

  auto [r1, r2] = signature(poly_from_ints({-2, 0, 0, 1}));
  CHECK(r1 == 1);
  CHECK(r2 == 1);
}

TEST_CASE("factor_over_z reassembles the input") {
  PolyZ f = poly_from_ints({28, -15, 1}) * poly_from_ints({-2, 0, 0, 1}) *
            poly_from_ints({-2, 0, 0, 1});
  std::vector<PolyZ> factors = factor_over_z(f);
  REQUIRE(factors.size() == 3);
  PolyZ prod = PolyZ::constant(BigInt(1));
  for (const auto& part : factors) {
    CHECK(irreducible_over_q(part).irreducible);
    prod = prod * part;
  }
  CHECK(prod == f);

  // X^4 - 1 = (X - 1)(X + 1)(X^2 + 1).
  CHECK(factor_over_z(poly_from_ints({-1, 0, 0, 0, 1})).size() == 3);
}
