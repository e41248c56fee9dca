#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minram/abstract_group.hpp"
#include "minram/bms.hpp"
#include "minram/ffield_family.hpp"
#include "minram/group_spec.hpp"
#include "minram/irreducibility.hpp"
#include "minram/nq_search.hpp"
#include "minram/ramification.hpp"
#include "minram/schinzel.hpp"

namespace minram {

enum class RealizeStrategy { schinzel, bms, ffield };

const char* to_string(RealizeStrategy s);
RealizeStrategy realize_strategy_from_string(const std::string& name);

// N_Gamma(H)/H together with a verified isomorphism onto the target group.
struct QuotientWitness {
  PermGroup h;
  PermGroup normalizer;
  AbstractGroup quotient;
  std::vector<int> iso;  // quotient element -> target element
};

// Defining polynomial for the fixed field itself, available when H is a
// point stabilizer (K is the stem field) or its even part (K is generated
// by one root and the square root of the discriminant).
struct ExplicitKPoly {
  PolyZ g;
  IrreducibilityOutcome irreducibility;
  RamificationReport ramification;
};

struct RealizationCertificate {
  std::string group_name;
  RealizeStrategy strategy = RealizeStrategy::bms;
  int n = 0;
  char gamma_kind = 'S';
  BigInt gamma_order;
  BigInt h_order;
  BigInt k_degree;        // [K : F] = |Gamma| / |H|
  bool k_is_base = false; // trivial target: H = Gamma and K = F
  QuotientWitness witness;
  std::optional<SchinzelInstance> schinzel;
  std::optional<BmsTriple> bms;
  std::optional<FfieldInstance> ffield;
  std::optional<ExplicitKPoly> explicit_k;
  std::string ramification_note;
};

struct RealizeOptions {
  RealizeStrategy strategy = RealizeStrategy::bms;
  int n = 0;      // pin the symbol count; 0 scans 2..n_max
  int n_max = 7;
  bool prefer_explicit_k = true;
  long group_budget_ms = 0;
  SchinzelParams schinzel;  // n is overwritten
  BmsParams bms;            // n is overwritten
  FfieldParams ffield;      // n is overwritten when pinned
};

// End-to-end realization: finds (Gamma, H) with N_Gamma(H)/H isomorphic to
// the target, obtains a Gamma-extension from the chosen pipeline at that n,
// and assembles the certificate for K = L^H. Failures from the subsearches
// are rethrown with the failing stage named.
RealizationCertificate realize(const GroupSpec& spec, const RealizeOptions& opts = {});

// Re-runs every check the certificate relies on: the witness homomorphism,
// the quotient order, and the explicit polynomial's irreducibility, degree,
// and ramified-set containment. Throws verification_error on any mismatch.
void verify_certificate(const RealizationCertificate& cert, const AbstractGroup& target);

}  // namespace minram
