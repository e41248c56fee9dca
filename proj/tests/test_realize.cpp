#include <vector>

#include "doctest.h"
#include "minram/errors.hpp"
#include "minram/group_spec.hpp"
#include "minram/nq_search.hpp"
#include "minram/realize.hpp"

using namespace minram;

TEST_CASE("normalizer-quotient search finds the reference hits") {
  NqSearchResult c2 = find_normalizer_quotients(AbstractGroup::cyclic(2), 2, 5);
  REQUIRE_FALSE(c2.hits.empty());
  CHECK(c2.last_completed_n == 5);
  // The point-stabilizer hit (S_5, A_4) must be present.
  bool found_a4 = false;
  for (const auto& hit : c2.hits)
    if (hit.n == 5 && hit.gamma_kind == 'S' && hit.h.order() == 12) found_a4 = true;
  CHECK(found_a4);
  // Hits are sorted by (n, index).
  for (size_t i = 1; i < c2.hits.size(); ++i) {
    CHECK(c2.hits[i - 1].n <= c2.hits[i].n);
    if (c2.hits[i - 1].n == c2.hits[i].n)
      CHECK(c2.hits[i - 1].gamma_index <= c2.hits[i].gamma_index);
  }

  NqSearchResult s3 = find_normalizer_quotients(
      AbstractGroup::from_perm_group(PermGroup::symmetric(3)), 4, 4);
  bool found_v4 = false;
  for (const auto& hit : s3.hits)
    if (hit.gamma_kind == 'S' && hit.h.order() == 4 && hit.normalizer_group.order() == 24)
      found_v4 = true;
  CHECK(found_v4);

  CHECK(special_case_an_minus_1(5).quotient.order() == 2);
}

TEST_CASE("trivial group realizes over the base field") {
  GroupSpec trivial = parse_group_spec("C1");
  RealizeOptions opts;
  RealizationCertificate cert = realize(trivial, opts);
  CHECK(cert.n == 2);
  CHECK(cert.k_is_base);
  CHECK(cert.k_degree == 1);
  CHECK(cert.bms.has_value());
  CHECK(cert.bms->r == 11);
  verify_certificate(cert, trivial.group);

  opts.strategy = RealizeStrategy::ffield;
  RealizationCertificate ff = realize(trivial, opts);
  CHECK(ff.n == 9);
  CHECK(ff.gamma_kind == 'A');
  CHECK(ff.k_is_base);
  CHECK(ff.ffield.has_value());
}

TEST_CASE("C2 at n = 5 yields the point-stabilizer tower with explicit K") {
  GroupSpec c2 = parse_group_spec("C2");
  RealizeOptions opts;
  opts.n = 5;
  RealizationCertificate cert = realize(c2, opts);
  CHECK(cert.n == 5);
  CHECK(cert.gamma_kind == 'S');
  CHECK(cert.h_order == 12);
  CHECK(cert.k_degree == 10);
  REQUIRE(cert.bms.has_value());
  CHECK(cert.bms->r == 9887);
  REQUIRE(cert.explicit_k.has_value());
  const PolyZ& g = cert.explicit_k->g;
  CHECK(g.degree() == 10);
  CHECK(g.coeff(10) == 1);
  CHECK(g.coeff(9) == -4);  // -2 * trace of the stem
  CHECK(cert.explicit_k->irreducibility.irreducible);
  // No place of K may be classified ramified outside the splitting-field set.
  for (const auto& place : cert.explicit_k->ramification.finite)
    if (place.status == PlaceStatus::ramified)
      CHECK((place.prime == cert.bms->p || place.prime == cert.bms->q ||
             place.prime == cert.bms->r));
  verify_certificate(cert, c2.group);
}

TEST_CASE("S3 realizations at pinned and free symbol counts") {
  GroupSpec s3 = parse_group_spec("S3");
  RealizeOptions opts;
  opts.n = 4;
  RealizationCertificate at4 = realize(s3, opts);
  CHECK(at4.h_order == 4);  // V4 inside S_4
  CHECK(at4.k_degree == 6);
  CHECK(at4.bms->r == 593);
  CHECK_FALSE(at4.explicit_k.has_value());

  opts.n = 0;
  RealizationCertificate free_n = realize(s3, opts);
  CHECK(free_n.n == 3);
  CHECK(free_n.h_order == 1);
  CHECK(free_n.k_degree == 6);
  CHECK(free_n.bms->r == 89);
  verify_certificate(free_n, s3.group);
}

TEST_CASE("schinzel strategy gives the stem itself when H is a point stabilizer") {
  GroupSpec c2 = parse_group_spec("C2");
  RealizeOptions opts;
  opts.strategy = RealizeStrategy::schinzel;
  opts.n = 2;
  RealizationCertificate cert = realize(c2, opts);
  CHECK(cert.h_order == 1);
  CHECK(cert.k_degree == 2);
  REQUIRE(cert.schinzel.has_value());
  REQUIRE(cert.explicit_k.has_value());
  CHECK(cert.explicit_k->g == cert.schinzel->f);
}

TEST_CASE("resource guard refuses symbol counts beyond the enumeration range") {
  GroupSpec c2 = parse_group_spec("C2");
  RealizeOptions opts;
  opts.n = 9;
  CHECK_THROWS_AS(realize(c2, opts), resource_error);
}

TEST_CASE("stage names distinguish group search from field search") {
  GroupSpec s3 = parse_group_spec("S3");
  RealizeOptions opts;
  opts.strategy = RealizeStrategy::schinzel;  // n = 3 box search finds nothing
  try {
    realize(s3, opts);
    FAIL("expected a staged failure");
  } catch (const not_found_error& e) {
    CHECK(std::string(e.what()).find("field-search stage") != std::string::npos);
  }
}

TEST_CASE("certificate verification rejects tampering") {
  GroupSpec c2 = parse_group_spec("C2");
  RealizeOptions opts;
  opts.n = 5;
  RealizationCertificate cert = realize(c2, opts);

  RealizationCertificate bad_degree = cert;
  bad_degree.k_degree = 5;
  CHECK_THROWS_AS(verify_certificate(bad_degree, c2.group), verification_error);

  RealizationCertificate bad_iso = cert;
  REQUIRE(bad_iso.witness.iso.size() == 2);
  std::swap(bad_iso.witness.iso[0], bad_iso.witness.iso[1]);
  CHECK_THROWS_AS(verify_certificate(bad_iso, c2.group), verification_error);

  RealizationCertificate bad_h = cert;
  bad_h.witness.h = PermGroup::symmetric(5);
  CHECK_THROWS_AS(verify_certificate(bad_h, c2.group), verification_error);

  RealizationCertificate bad_poly = cert;
  bad_poly.explicit_k->g = poly_from_ints({1, 0, 1});
  CHECK_THROWS_AS(verify_certificate(bad_poly, c2.group), verification_error);

  // The right certificate with the wrong target group must also fail.
  CHECK_THROWS_AS(verify_certificate(cert, AbstractGroup::cyclic(3)), verification_error);
}
