// Acceptance gate: one self-contained check per claim the tool set makes.
// Each criterion prints a single PASS/FAIL line; the exit status is nonzero
// when any selected criterion fails. Run a single one with --criterion N.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "minram/abstract_group.hpp"
#include "minram/bms.hpp"
#include "minram/cli.hpp"
#include "minram/errors.hpp"
#include "minram/ffield_family.hpp"
#include "minram/galois_certify.hpp"
#include "minram/graphs.hpp"
#include "minram/group_spec.hpp"
#include "minram/irreducibility.hpp"
#include "minram/nq_search.hpp"
#include "minram/perm_group.hpp"
#include "minram/poly.hpp"
#include "minram/primality.hpp"
#include "minram/ramification.hpp"
#include "minram/realize.hpp"
#include "minram/resultant.hpp"
#include "minram/schinzel.hpp"
#include "minram/subgroups.hpp"

using namespace minram;

namespace {

struct check_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw check_failure(what);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void expect_within(double elapsed, double budget, const std::string& what) {
  std::ostringstream ss;
  ss << what << " took " << std::fixed << std::setprecision(2) << elapsed << "s (budget "
     << budget << "s)";
  expect(elapsed <= budget, ss.str());
}

std::vector<BigInt> ramified_set(const RamificationReport& report) {
  std::vector<BigInt> out;
  for (const auto& place : report.finite)
    if (place.status == PlaceStatus::ramified) out.push_back(place.prime);
  return out;
}

bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.order() == b.order() && a.is_subgroup_of(b);
}

// Abstract multiplication table of a permutation group (quotient by the
// trivial subgroup of the same degree).
AbstractGroup abstract_of(const PermGroup& g) { return quotient_group(g, PermGroup(g.degree())); }

// --------------------------------------------------------------------------
// 1. Pinned quadratic search: a = (1, -1) yields t = 4, f = X^2 - 15X + 28,
//    H = 113 prime, a certified S_2 extension ramified at exactly one prime,
//    totally real, in under a second.

std::string criterion_01() {
  auto start = std::chrono::steady_clock::now();
  SchinzelParams params;
  params.n = 2;
  params.t_max = 10;
  std::vector<BigInt> pinned{BigInt(1), BigInt(-1)};
  SchinzelInstance inst = schinzel_search(params, &pinned);
  expect(inst.t == 4, "expected t = 4, got " + inst.t.get_str());
  expect(inst.f == poly_from_ints({28, -15, 1}), "wrong specialized polynomial");
  expect(inst.h_value == 113, "expected H = 113, got " + inst.h_value.get_str());
  expect(inst.h_primality == Primality::prime, "H = 113 must be proven prime");
  expect(inst.galois.status == GaloisStatus::certified_sn, "group not certified S_2");
  expect(inst.ramification.all_real, "extension must be totally real");
  std::vector<BigInt> ram = ramified_set(inst.ramification);
  expect(ram.size() == 1 && ram[0] == 113, "expected exactly one ramified prime, 113");
  expect_within(seconds_since(start), 1.0, "pinned quadratic search");
  return "t=4, f=X^2-15X+28, H=113 prime, one ramified prime, totally real";
}

// --------------------------------------------------------------------------
// 2. Free coefficient-box search at n = 3 and n = 4: a prime-H, certified
//    S_n, single-ramified-prime, totally real instance with t <= 10^5,
//    within five minutes per degree.

std::string criterion_02() {
  std::ostringstream detail;
  for (int n : {3, 4}) {
    auto start = std::chrono::steady_clock::now();
    SchinzelParams params;
    params.n = n;
    params.t_max = 100000;
    SchinzelInstance inst = schinzel_search(params);
    expect(inst.h_primality != Primality::composite, "H must be prime");
    expect(inst.galois.status == GaloisStatus::certified_sn, "group not certified S_n");
    expect(inst.ramification.all_real, "extension must be totally real");
    expect(ramified_set(inst.ramification).size() == 1, "expected a single ramified prime");
    expect(inst.t <= 100000, "t exceeded the scan bound");
    expect_within(seconds_since(start), 300.0, "free search at n = " + std::to_string(n));
    if (n != 3) detail << "; ";
    detail << "n=" << n << ": t=" << inst.t.get_str() << ", H=" << inst.h_value.get_str();
  }
  return detail.str();
}

// --------------------------------------------------------------------------
// 3. Structure of the one-prime polynomial H(a, t): degree n(n-1) in t,
//    leading coefficient prod_{i<k} (k-i)^2, and agreement with the
//    discriminant of the specialized polynomial at random t, exactly.

std::string criterion_03() {
  std::mt19937_64 rng(20260814);
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::uniform_int_distribution<long> tval(-1000000, 1000000);
  long identities = 0;
  for (int n = 2; n <= 5; ++n) {
    std::vector<BigInt> a;
    for (int i = 0; i < n; ++i) a.emplace_back(coeff(rng));
    PolyZ h = compute_h(n, a);
    expect(h.degree() == n * (n - 1), "deg_t H != n(n-1) at n = " + std::to_string(n));
    BigInt lc = 1;
    for (int d = 1; d < n; ++d)
      for (int rep = 0; rep < 2 * (n - d); ++rep) lc *= d;
    expect(h.lc() == lc, "leading coefficient of H is wrong at n = " + std::to_string(n));
    PolyZT family = build_f(n, a);
    for (int sample = 0; sample < 20; ++sample) {
      BigInt t(tval(rng));
      std::vector<BigInt> coeffs;
      for (int i = 0; i <= family.degree(); ++i) coeffs.push_back(family.coeff(i).eval(t));
      expect(discriminant(PolyZ(coeffs)) == h.eval(t),
             "H(a, t) != disc f(X; a, t) at n = " + std::to_string(n) + ", t = " + t.get_str());
      ++identities;
    }
  }
  return "n = 2..5: degree and leading coefficient exact, " + std::to_string(identities) +
         " random-t discriminant identities";
}

// --------------------------------------------------------------------------
// 4. First prime-power-sum triples: n = 2 gives (p, q, r) = (2, 3, 11) with
//    the stem Y^2 - 3Y - 6 ramified exactly at {3, 11}; n = 3 gives
//    (3, 2, 89). Both with proven primality, together within a minute.

std::string criterion_04() {
  auto start = std::chrono::steady_clock::now();
  BmsParams params;
  params.n = 2;
  BmsTriple two = bms_search(params);
  expect(two.p == 2 && two.q == 3 && two.r == 11, "first n = 2 triple is not (2, 3, 11)");
  expect(two.stem == poly_from_ints({-6, -3, 1}), "wrong n = 2 stem polynomial");
  expect(two.ramification.disc == 33, "stem discriminant must be 33");
  std::vector<BigInt> ram = ramified_set(two.ramification);
  expect(ram == std::vector<BigInt>{BigInt(3), BigInt(11)},
         "stem must ramify exactly at {3, 11}; in particular p = 2 stays unramified");
  for (Primality level : {two.p_level, two.q_level, two.r_level})
    expect(level == Primality::prime, "n = 2 triple entries must be proven prime");
  expect(two.galois.status == GaloisStatus::certified_sn, "n = 2 stem not certified S_2");

  params.n = 3;
  BmsTriple three = bms_search(params);
  expect(three.p == 3 && three.q == 2, "first n = 3 pair is not (3, 2)");
  expect(three.r == 89 && three.r == 27 * three.p + 4 * three.q, "n = 3 must give r = 89");
  for (Primality level : {three.p_level, three.q_level, three.r_level})
    expect(level == Primality::prime, "n = 3 triple entries must be proven prime");
  expect(three.galois.status == GaloisStatus::certified_sn, "n = 3 stem not certified S_3");
  expect_within(seconds_since(start), 60.0, "both searches");
  return "n=2: (2,3,11), stem ramified exactly at {3,11}; n=3: (3,2,89); all proven prime";
}

// --------------------------------------------------------------------------
// 5. Even-characteristic family: disc_X(X^9 + TX^5 + 1) over F_2[T] is the
//    constant 1, so no finite place ramifies, and 200 Frobenius samples over
//    F_2, F_4, F_8 all land in A_9, within thirty seconds.

std::string criterion_05() {
  auto start = std::chrono::steady_clock::now();
  FfieldParams params;
  FfieldInstance inst = function_field_family(params);
  expect(inst.n == 9 && inst.q == 2, "default family must be n = 9 over F_2");
  expect(inst.disc_constant && inst.disc.degree() == 0, "disc_X f must be constant in T");
  expect(inst.disc.coeff(0).to_index() == 1, "disc_X f must equal 1");
  expect(inst.finite_candidates.empty(), "no finite place may ramify");
  expect(inst.evidence.size() == 200, "expected 200 specializations");
  std::set<int> extensions;
  for (const auto& ev : inst.evidence) {
    extensions.insert(ev.extension);
    int transpositions = 0;
    for (int len : ev.cycle_type) transpositions += len - 1;
    expect(ev.even && transpositions % 2 == 0,
           "odd Frobenius permutation at extension " + std::to_string(ev.extension));
  }
  expect(inst.all_types_even, "evidence summary flag must be set");
  expect(extensions == std::set<int>{1, 2, 3}, "evidence must cover F_2, F_4, F_8");
  expect_within(seconds_since(start), 30.0, "family analysis");
  return "disc = 1 in F_2[T], 200/200 even Frobenius types over F_2, F_4, F_8";
}

// --------------------------------------------------------------------------
// 6. Normalizer-quotient search for C2, C3, C4, C6, V4, S3 with n <= 7:
//    at least one hit per target, every hit re-verified against the
//    exhaustive normalizer, and the landmark hits present, within ten
//    minutes total.

std::string criterion_06() {
  auto start = std::chrono::steady_clock::now();
  struct Target {
    const char* name;
    AbstractGroup group;
  };
  const std::vector<Target> targets = {
      {"C2", AbstractGroup::cyclic(2)}, {"C3", AbstractGroup::cyclic(3)},
      {"C4", AbstractGroup::cyclic(4)}, {"C6", AbstractGroup::cyclic(6)},
      {"V4", AbstractGroup::klein_four()}, {"S3", AbstractGroup::dihedral(3)}};

  long verified = 0;
  bool c2_s5_a4 = false, c3_s7_14 = false, c6_s7_7 = false, s3_s4_v4 = false;
  std::ostringstream detail;
  for (const Target& target : targets) {
    NqSearchResult res = find_normalizer_quotients(target.group, 2, 7);
    expect(res.last_completed_n == 7, std::string(target.name) + ": scan did not reach n = 7");
    expect(!res.hits.empty(), std::string(target.name) + ": no hit with n <= 7");
    for (const NqHit& hit : res.hits) {
      expect(hit.h.is_subgroup_of(hit.gamma), "hit subgroup not inside its ambient group");
      PermGroup oracle = normalizer_exhaustive(hit.gamma, hit.h);
      expect(same_group(oracle, hit.normalizer_group),
             std::string(target.name) + ": normalizer disagrees with the exhaustive oracle");
      expect(quotient_group(oracle, hit.h).is_isomorphic_to(target.group),
             std::string(target.name) + ": quotient is not the target");
      ++verified;
      if (target.group.order() == 2 && hit.n == 5 && hit.gamma_kind == 'S' &&
          hit.h.order() == 12 && abstract_of(hit.h).is_isomorphic_to(AbstractGroup::alternating(4)))
        c2_s5_a4 = true;
      if (target.group.order() == 3 && hit.n == 7 && hit.gamma_kind == 'S' &&
          hit.h.order() == 14 && hit.normalizer_group.order() == 42)
        c3_s7_14 = true;
      if (target.group.order() == 6 && target.group.is_isomorphic_to(AbstractGroup::cyclic(6)) &&
          hit.n == 7 && hit.gamma_kind == 'S' && hit.h.order() == 7 &&
          abstract_of(hit.h).is_isomorphic_to(AbstractGroup::cyclic(7)))
        c6_s7_7 = true;
      if (target.group.order() == 6 && target.group.is_isomorphic_to(AbstractGroup::dihedral(3)) &&
          hit.n == 4 && hit.gamma_kind == 'S' && hit.h.order() == 4 &&
          abstract_of(hit.h).is_isomorphic_to(AbstractGroup::klein_four()))
        s3_s4_v4 = true;
    }
    detail << target.name << ":" << res.hits.size() << " ";
  }
  expect(c2_s5_a4, "missing landmark hit: C2 from A4 inside S5");
  expect(c3_s7_14, "missing landmark hit: C3 from the order-14 subgroup inside S7");
  expect(c6_s7_7, "missing landmark hit: C6 from a 7-cycle inside S7");
  expect(s3_s4_v4, "missing landmark hit: S3 from V4 inside S4");
  expect_within(seconds_since(start), 600.0, "six searches");
  return "hits " + detail.str() + "(" + std::to_string(verified) +
         " re-verified exhaustively), landmarks present";
}

// --------------------------------------------------------------------------
// 7. Normalizer backtracking agrees with the exhaustive scan on every
//    subgroup of S_n for n <= 6, and the subgroup classifications have the
//    known class counts.

std::string criterion_07() {
  long compared = 0;
  for (int n = 2; n <= 6; ++n) {
    PermGroup sn = PermGroup::symmetric(n);
    for (const PermGroup& h : all_subgroups(sn)) {
      PermGroup fast = normalizer(sn, h);
      PermGroup oracle = normalizer_exhaustive(sn, h);
      expect(same_group(fast, oracle),
             "normalizer mismatch in S_" + std::to_string(n) + " at a subgroup of order " +
                 h.order().get_str());
      ++compared;
    }
  }
  expect(subgroup_class_reps(PermGroup::symmetric(3)).size() == 4, "S_3 must have 4 classes");
  expect(subgroup_class_reps(PermGroup::symmetric(4)).size() == 11, "S_4 must have 11 classes");
  expect(subgroup_class_reps(PermGroup::alternating(4)).size() == 5, "A_4 must have 5 classes");
  return std::to_string(compared) +
         " subgroups of S_2..S_6 checked; class counts 4 (S_3), 11 (S_4), 5 (A_4)";
}

// --------------------------------------------------------------------------
// 8. End-to-end realization of C2 at n = 5 with H = A_4: an explicit
//    irreducible degree-10 polynomial for K, ramification confined to the
//    triple's primes (undecided places allowed but counted), and a fully
//    verified quotient witness, within ten minutes.

std::string criterion_08() {
  auto start = std::chrono::steady_clock::now();
  GroupSpec spec = parse_group_spec("C2");
  RealizeOptions opts;
  opts.strategy = RealizeStrategy::bms;
  opts.n = 5;
  RealizationCertificate cert = realize(spec, opts);
  expect(cert.n == 5 && cert.gamma_kind == 'S', "realization must live in S_5");
  expect(cert.h_order == 12 && cert.k_degree == 10, "expected H = A_4 with [K : Q] = 10");
  expect(abstract_of(cert.witness.h).is_isomorphic_to(AbstractGroup::alternating(4)),
         "fixed group is not A_4");
  expect(cert.bms.has_value(), "certificate must carry the triple");
  expect(cert.explicit_k.has_value(), "certificate must carry an explicit K-polynomial");
  const ExplicitKPoly& k = *cert.explicit_k;
  expect(k.g.degree() == 10 && k.g.lc() == 1, "K-polynomial must be monic of degree 10");
  IrreducibilityOutcome irr = irreducible_over_q(k.g);
  expect(irr.irreducible, "K-polynomial must be irreducible");

  std::set<std::string> allowed{cert.bms->p.get_str(), cert.bms->q.get_str(),
                                cert.bms->r.get_str()};
  int undecided = 0;
  for (const auto& place : k.ramification.finite) {
    if (place.status == PlaceStatus::undecided) ++undecided;
    if (place.status == PlaceStatus::ramified)
      expect(allowed.count(place.prime.get_str()) == 1,
             "prime " + place.prime.get_str() + " ramifies outside the triple");
  }
  verify_certificate(cert, spec.group);
  expect_within(seconds_since(start), 600.0, "realization");
  return "triple (" + cert.bms->p.get_str() + "," + cert.bms->q.get_str() + "," +
         cert.bms->r.get_str() + "), explicit degree-10 K-polynomial, " +
         std::to_string(undecided) + " undecided places, witness verified";
}

// --------------------------------------------------------------------------
// 9. Every catalog group of order at most 8 is the full automorphism group
//    of its gadget graph, by brute-force automorphism enumeration, within
//    ten seconds per group.

std::string criterion_09() {
  int groups = 0;
  std::size_t largest = 0;
  for (const auto& [name, group] : frucht_catalog()) {
    if (group.order() > 8) continue;
    auto start = std::chrono::steady_clock::now();
    SimpleGraph graph = frucht_graph(group);
    PermGroup aut = graph_automorphisms(graph, 200);
    expect(aut.order() == BigInt(group.order()),
           name + ": |Aut| = " + aut.order().get_str() + ", want " +
               std::to_string(group.order()));
    expect(abstract_of(aut).is_isomorphic_to(group), name + ": Aut has the wrong structure");
    expect_within(seconds_since(start), 10.0, name);
    ++groups;
    largest = std::max(largest, static_cast<std::size_t>(graph.n));
  }
  expect(groups == 12, "expected 12 catalog groups of order <= 8");
  return "12 groups realized as full automorphism groups; largest graph has " +
         std::to_string(largest) + " vertices";
}

// --------------------------------------------------------------------------
// 10. Certification spot checks: X^5 - X - 1 is certified S_5 with
//     discriminant 2869, X^4 + 1 is rejected by its square discriminant 256,
//     X^3 - 2 is certified S_3 with discriminant -108.

std::string criterion_10() {
  GaloisCertificate quintic = galois_certify(poly_from_ints({-1, -1, 0, 0, 0, 1}));
  expect(quintic.status == GaloisStatus::certified_sn, "X^5 - X - 1 must certify as S_5");
  expect(quintic.disc == 2869, "disc(X^5 - X - 1) must be 2869");

  GaloisCertificate quartic = galois_certify(poly_from_ints({1, 0, 0, 0, 1}));
  expect(quartic.status == GaloisStatus::not_sn, "X^4 + 1 must be rejected");
  expect(quartic.disc_square && quartic.disc == 256, "disc(X^4 + 1) = 256 must be square");

  GaloisCertificate cubic = galois_certify(poly_from_ints({-2, 0, 0, 1}));
  expect(cubic.status == GaloisStatus::certified_sn, "X^3 - 2 must certify as S_3");
  expect(cubic.disc == -108, "disc(X^3 - 2) must be -108");
  return "S_5 certified (disc 2869), square-disc rejection (256), S_3 certified (disc -108)";
}

// --------------------------------------------------------------------------
// 11. Determinism: the same seed yields byte-identical result documents
//     regardless of the thread count.

std::string criterion_11() {
  auto run = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run_command(args, out, err);
    expect(code == 0, "command failed: " + err.str());
    return out.str();
  };
  std::string one = run({"schinzel", "--n", "2", "--t-max", "2000", "--seed", "7",
                         "--threads", "1"});
  std::string four = run({"schinzel", "--n", "2", "--t-max", "2000", "--seed", "7",
                          "--threads", "4"});
  expect(one == four, "coefficient-box search differs between 1 and 4 threads");
  std::string b1 = run({"bms", "--n", "3", "--seed", "7", "--threads", "1"});
  std::string b3 = run({"bms", "--n", "3", "--seed", "7", "--threads", "3"});
  expect(b1 == b3, "triple search differs between 1 and 3 threads");
  return "payloads byte-identical across thread counts (" + std::to_string(one.size()) + " and " +
         std::to_string(b1.size()) + " bytes)";
}

using CriterionFn = std::string (*)();

const CriterionFn kCriteria[] = {criterion_01, criterion_02, criterion_03, criterion_04,
                                 criterion_05, criterion_06, criterion_07, criterion_08,
                                 criterion_09, criterion_10, criterion_11};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      selected = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0] << " [--criterion N]\n";
      return 1;
    }
  }
  const int count = static_cast<int>(std::size(kCriteria));
  if (selected < 0 || selected > count) {
    std::cerr << "criterion must lie in [1, " << count << "]\n";
    return 1;
  }

  int failures = 0;
  for (int i = 1; i <= count; ++i) {
    if (selected != 0 && i != selected) continue;
    auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS", detail;
    try {
      detail = kCriteria[i - 1]();
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = e.what();
      ++failures;
    }
    std::cout << "criterion " << std::setw(2) << std::setfill('0') << i << " " << verdict << " ("
              << std::fixed << std::setprecision(2) << seconds_since(start) << "s) " << detail
              << "\n";
  }
  return failures == 0 ? 0 : 1;
}
