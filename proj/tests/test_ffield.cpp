#include <set>

#include "doctest.h"
#include "minram/errors.hpp"
#include "minram/ffield_family.hpp"

using namespace minram;

TEST_CASE("degree-9 family over F_2 has constant discriminant 1") {
  FfieldParams params;
  FfieldInstance inst = function_field_family(params);
  CHECK(inst.n == 9);
  CHECK(inst.q == 2);
  CHECK(inst.disc_constant);
  CHECK(inst.disc.degree() == 0);
  CHECK(inst.disc.coeff(0).to_index() == 1);
  CHECK(inst.finite_candidates.empty());

  REQUIRE(inst.evidence.size() == 200);
  CHECK(inst.all_types_even);
  std::set<int> extensions;
  for (const auto& ev : inst.evidence) {
    extensions.insert(ev.extension);
    int transpositions = 0;
    for (int len : ev.cycle_type) transpositions += len - 1;
    CHECK(transpositions % 2 == 0);
    CHECK(ev.even);
  }
  // Specializations draw gamma from F_2, F_4, and F_8.
  CHECK(extensions == std::set<int>{1, 2, 3});
}

TEST_CASE("family sampling is deterministic under the seed") {
  FfieldParams params;
  params.specializations = 25;
  FfieldInstance a = function_field_family(params);
  FfieldInstance b = function_field_family(params);
  REQUIRE(a.evidence.size() == b.evidence.size());
  for (size_t i = 0; i < a.evidence.size(); ++i) {
    CHECK(a.evidence[i].extension == b.evidence[i].extension);
    CHECK(a.evidence[i].gamma_index == b.evidence[i].gamma_index);
    CHECK(a.evidence[i].cycle_type == b.evidence[i].cycle_type);
  }
  params.seed = 1;
  FfieldInstance c = function_field_family(params);
  bool same = true;
  for (size_t i = 0; i < a.evidence.size() && i < c.evidence.size(); ++i)
    if (a.evidence[i].gamma_index != c.evidence[i].gamma_index) same = false;
  CHECK_FALSE(same);
}

TEST_CASE("family preconditions are enforced") {
  FfieldParams params;
  params.n = 8;  // not 1 mod 8
  CHECK_THROWS_AS(function_field_family(params), input_error);
  params.n = 9;
  params.q = 3;  // not a power of 2
  CHECK_THROWS_AS(function_field_family(params), input_error);
  params.q = 2;
  params.specializations = 0;
  CHECK_THROWS_AS(function_field_family(params), input_error);
}
