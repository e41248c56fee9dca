#include <fstream>
#include <vector>

#include "doctest.h"
#include "minram/abstract_group.hpp"
#include "minram/errors.hpp"
#include "minram/group_spec.hpp"
#include "minram/perm.hpp"
#include "minram/perm_group.hpp"
#include "minram/subgroups.hpp"

using namespace minram;

TEST_CASE("permutation composition, parity, cycle structure") {
  Perm a = Perm::from_cycles("(1 2 3)", 4);
  Perm b = Perm::from_cycles("(3 4)", 4);
  // (a * b)(x) = a(b(x)): 3 -> 4 under b, then fixed by a.
  Perm ab = a * b;
  CHECK(ab.to_cycle_string() == "(1 2 3 4)");
  CHECK(a.parity_sign() == 1);
  CHECK(b.parity_sign() == -1);
  CHECK(ab.parity_sign() == -1);
  CHECK((a * a.inverse()).is_identity());
  CHECK(ab.cycle_type() == std::vector<int>{4});
  CHECK(Perm::from_cycles("(1 2)(3 4)", 5).cycle_type() == std::vector<int>{2, 2, 1});
  CHECK_THROWS_AS(Perm::from_cycles("(1 2", 3), parse_error);
  CHECK_THROWS_AS(Perm::from_cycles("(1 9)", 3), input_error);
}

TEST_CASE("stabilizer-chain orders and membership") {
  CHECK(PermGroup::symmetric(5).order() == 120);
  CHECK(PermGroup::alternating(5).order() == 60);
  CHECK(PermGroup::symmetric(8).order() == 40320);

  PermGroup d4(4, {Perm::from_cycles("(1 2 3 4)", 4), Perm::from_cycles("(1 3)", 4)});
  CHECK(d4.order() == 8);
  CHECK(d4.contains(Perm::from_cycles("(2 4)", 4)));
  CHECK_FALSE(d4.contains(Perm::from_cycles("(1 2)", 4)));

  CHECK(PermGroup::symmetric(6).orbit_of(2).size() == 6);
  PermGroup v4(4, {Perm::from_cycles("(1 2)(3 4)", 4), Perm::from_cycles("(1 3)(2 4)", 4)});
  CHECK(v4.order() == 4);
  CHECK(v4.orbits().size() == 1);
}

TEST_CASE("subgroup enumeration matches the classical counts") {
  CHECK(all_subgroups(PermGroup::symmetric(3)).size() == 6);
  CHECK(all_subgroups(PermGroup::symmetric(4)).size() == 30);
  CHECK(subgroup_class_reps(PermGroup::symmetric(3)).size() == 4);
  CHECK(subgroup_class_reps(PermGroup::symmetric(4)).size() == 11);
  CHECK(subgroup_class_reps(PermGroup::alternating(4)).size() == 5);
  CHECK(subgroup_class_reps(PermGroup::symmetric(5)).size() == 19);
}

TEST_CASE("backtracking normalizer equals exhaustive enumeration") {
  for (int n = 3; n <= 5; ++n) {
    PermGroup g = PermGroup::symmetric(n);
    for (const PermGroup& h : subgroup_class_reps(g)) {
      PermGroup fast = normalizer(g, h);
      PermGroup slow = normalizer_exhaustive(g, h);
      CHECK(fast.order() == slow.order());
      for (const Perm& gen : slow.generators()) CHECK(fast.contains(gen));
    }
  }
  // Spot checks at degree 6.
  PermGroup s6 = PermGroup::symmetric(6);
  PermGroup c6(6, {Perm::from_cycles("(1 2 3 4 5 6)", 6)});
  CHECK(normalizer(s6, c6).order() == normalizer_exhaustive(s6, c6).order());
  PermGroup s3s3(6, {Perm::from_cycles("(1 2 3)", 6), Perm::from_cycles("(1 2)", 6),
                     Perm::from_cycles("(4 5 6)", 6), Perm::from_cycles("(4 5)", 6)});
  CHECK(normalizer(s6, s3s3).order() == normalizer_exhaustive(s6, s3s3).order());
}

TEST_CASE("quotients and abstract-group isomorphism") {
  PermGroup s4 = PermGroup::symmetric(4);
  PermGroup v4(4, {Perm::from_cycles("(1 2)(3 4)", 4), Perm::from_cycles("(1 3)(2 4)", 4)});
  AbstractGroup q = quotient_group(s4, v4);
  CHECK(q.order() == 6);
  CHECK(q.describe() == "S3");
  CHECK_FALSE(q.is_abelian());

  AbstractGroup s3 = AbstractGroup::from_perm_group(PermGroup::symmetric(3));
  CHECK(q.is_isomorphic_to(s3));
  auto iso = q.isomorphism_to(s3);
  REQUIRE(iso.has_value());
  // The witness is a bijective homomorphism.
  for (int x = 0; x < q.order(); ++x)
    for (int y = 0; y < q.order(); ++y)
      CHECK((*iso)[q.mul(x, y)] == s3.mul((*iso)[x], (*iso)[y]));

  AbstractGroup c6 = AbstractGroup::cyclic(6);
  CHECK_FALSE(q.is_isomorphic_to(c6));
  CHECK(c6.is_abelian());
  CHECK(c6.element_order_multiset() == std::vector<int>{1, 2, 3, 3, 6, 6});
}

TEST_CASE("group specs parse names, generators, and table files") {
  GroupSpec q8 = parse_group_spec("Q8");
  CHECK(q8.group.order() == 8);
  CHECK(q8.group.describe() == "Q8");
  CHECK(parse_group_spec("c_6").group.order() == 6);
  CHECK(parse_group_spec("V4").group.is_abelian());

  GroupSpec gens = parse_group_spec("(1 2 3);(1 2)");
  CHECK(gens.group.order() == 6);
  CHECK(gens.group.describe() == "S3");

  const char* path = "minram_test_table.txt";
  {
    std::ofstream table(path);
    table << "2\n0 1\n1 0\n";
  }
  GroupSpec from_table = parse_group_spec(std::string("@") + path);
  CHECK(from_table.group.order() == 2);
  std::remove(path);

  CHECK_THROWS_AS(parse_group_spec("Z99q"), input_error);
  CHECK_THROWS_AS(parse_group_spec("@/nonexistent/file"), input_error);
}
