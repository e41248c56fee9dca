#include "json_io.hpp"

#include "minram/errors.hpp"

namespace minram::jio {

namespace {

const char* status_token(GaloisStatus s) {
  switch (s) {
    case GaloisStatus::certified_sn: return "certified-sn";
    case GaloisStatus::certified_subset_an: return "certified-subset-an";
    case GaloisStatus::evidence_only: return "evidence-only";
    case GaloisStatus::not_sn: return "not-sn";
  }
  return "?";
}

const char* primality_token(Primality p) {
  switch (p) {
    case Primality::composite: return "composite";
    case Primality::prime: return "prime";
    case Primality::probable_prime: return "probable-prime";
  }
  return "?";
}

const char* method_token(IrredMethod m) {
  return m == IrredMethod::mod_p_witness ? "mod-p-witness" : "zassenhaus-complete";
}

}  // namespace

Json big_json(const BigInt& x) { return x.get_str(); }

BigInt big_from_json(const Json& j) {
  if (!j.is_string()) throw input_error("expected a decimal string, got " + j.dump());
  try {
    return BigInt(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw input_error("bad decimal string: " + j.dump());
  }
}

Json poly_json(const PolyZ& f) {
  Json coeffs = Json::array();
  for (const BigInt& c : f.coeffs()) coeffs.push_back(big_json(c));
  return Json{{"coeffs", std::move(coeffs)}};
}

PolyZ poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw input_error("expected {\"coeffs\": [...]}, got " + j.dump());
  std::vector<BigInt> coeffs;
  for (const Json& c : j["coeffs"]) coeffs.push_back(big_from_json(c));
  return PolyZ(std::move(coeffs));
}

Json perm_group_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const Perm& p : g.generators()) gens.push_back(p.to_cycle_string());
  return Json{{"degree", g.degree()}, {"order", big_json(g.order())},
              {"generators", std::move(gens)}};
}

PermGroup perm_group_from_json(const Json& j) {
  int degree = j.at("degree").get<int>();
  std::vector<Perm> gens;
  for (const Json& s : j.at("generators"))
    gens.push_back(Perm::from_cycles(s.get<std::string>(), degree));
  PermGroup g(degree, gens);
  if (j.contains("order") && g.order() != big_from_json(j["order"]))
    throw verification_error("permutation group order differs from the recorded one");
  return g;
}

Json irreducibility_json(const IrreducibilityOutcome& o) {
  Json j;
  j["irreducible"] = o.irreducible;
  if (o.irreducible) {
    j["method"] = method_token(o.certificate.method);
    j["witness_prime"] = big_json(o.certificate.witness_prime);
    j["hensel_exponent"] = o.certificate.hensel_exponent;
    j["modular_factors"] = o.certificate.modular_factors;
  } else {
    Json factors = Json::array();
    for (const PolyZ& f : o.factors) factors.push_back(poly_json(f));
    j["factors"] = std::move(factors);
  }
  return j;
}

Json galois_json(const GaloisCertificate& c) {
  Json j;
  j["status"] = status_token(c.status);
  j["disc"] = big_json(c.disc);
  j["disc_square"] = c.disc_square;
  j["irreducibility"] = irreducibility_json(c.irreducibility);
  Json ws = Json::array();
  for (const CycleTypeWitness& w : c.witnesses)
    ws.push_back(Json{{"prime", big_json(w.prime)}, {"cycle_type", w.cycle_type}});
  j["witnesses"] = std::move(ws);
  j["primitivity_witness"] = c.primitivity_witness;
  j["transposition_witness"] = c.transposition_witness;
  j["primes_examined"] = c.primes_examined;
  return j;
}

Json ramification_json(const RamificationReport& r) {
  Json j;
  j["disc"] = big_json(r.disc);
  j["sign"] = r.disc_factorization.sign;
  Json factors = Json::array();
  for (const IntFactor& f : r.disc_factorization.factors)
    factors.push_back(Json{{"prime", big_json(f.prime)},
                           {"exponent", f.exponent},
                           {"certainty", primality_token(f.certainty)}});
  j["factors"] = std::move(factors);
  j["unfactored"] = big_json(r.disc_factorization.unfactored);
  Json places = Json::array();
  for (const FinitePlace& p : r.finite)
    places.push_back(Json{{"prime", big_json(p.prime)},
                          {"status", to_string(p.status)},
                          {"reason", p.reason}});
  j["finite_places"] = std::move(places);
  j["complex_pairs"] = r.complex_pairs;
  j["all_real"] = r.all_real;
  j["closure_note"] = r.closure_note;
  return j;
}

Json graph_json(const SimpleGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges) edges.push_back(Json::array({u, v}));
  return Json{{"vertices", g.n}, {"edges", std::move(edges)}};
}

Json schinzel_json(const SchinzelInstance& inst) {
  Json j;
  j["n"] = inst.n;
  Json a = Json::array();
  for (const BigInt& x : inst.a) a.push_back(big_json(x));
  j["a"] = std::move(a);
  j["t"] = big_json(inst.t);
  j["f"] = poly_json(inst.f);
  j["h_value"] = big_json(inst.h_value);
  j["h_primality"] = primality_token(inst.h_primality);
  Json c = Json::array();
  for (const BigInt& x : inst.c) c.push_back(big_json(x));
  j["c"] = std::move(c);
  j["big_p"] = big_json(inst.big_p);
  j["galois"] = galois_json(inst.galois);
  j["ramification"] = ramification_json(inst.ramification);
  j["mod_u"] = big_json(inst.mod_u);
  j["mod_v"] = big_json(inst.mod_v);
  j["select_stats"] = Json{{"examined", inst.select_stats.examined},
                           {"rejected_separability", inst.select_stats.rejected_separability},
                           {"rejected_content", inst.select_stats.rejected_content},
                           {"rejected_irreducible", inst.select_stats.rejected_irreducible},
                           {"rejected_square", inst.select_stats.rejected_square},
                           {"rejected_degenerate", inst.select_stats.rejected_degenerate}};
  j["scan_stats"] = Json{{"examined", inst.scan_stats.examined},
                         {"rejected_nonprime", inst.scan_stats.rejected_nonprime},
                         {"rejected_galois", inst.scan_stats.rejected_galois},
                         {"rejected_real", inst.scan_stats.rejected_real},
                         {"rejected_ramification", inst.scan_stats.rejected_ramification}};
  return j;
}

Json bms_json(const BmsTriple& t) {
  Json j;
  j["n"] = t.n;
  j["p"] = big_json(t.p);
  j["q"] = big_json(t.q);
  j["r"] = big_json(t.r);
  j["p_level"] = primality_token(t.p_level);
  j["q_level"] = primality_token(t.q_level);
  j["r_level"] = primality_token(t.r_level);
  j["qf"] = poly_json(t.qf);
  j["stem"] = poly_json(t.stem);
  j["galois"] = galois_json(t.galois);
  j["ramification"] = ramification_json(t.ramification);
  j["inertia_at_r"] = t.inertia_at_r;
  j["stats"] = Json{{"pairs_examined", t.stats.pairs_examined},
                    {"rejected_r_composite", t.stats.rejected_r_composite},
                    {"rejected_galois", t.stats.rejected_galois},
                    {"rejected_ramification", t.stats.rejected_ramification},
                    {"rejected_inertia", t.stats.rejected_inertia}};
  return j;
}

Json ffield_json(const FfieldInstance& inst) {
  Json j;
  j["q"] = big_json(inst.q);
  j["k"] = inst.k;
  j["n"] = inst.n;
  j["family"] = inst.family;
  Json disc_coeffs = Json::array();
  for (const FqElem& c : inst.disc.coeffs()) disc_coeffs.push_back(big_json(c.to_index()));
  j["disc"] = Json{{"coeffs", std::move(disc_coeffs)}};
  j["disc_constant"] = inst.disc_constant;
  Json cands = Json::array();
  for (const PolyFq& f : inst.finite_candidates) {
    Json coeffs = Json::array();
    for (const FqElem& c : f.coeffs()) coeffs.push_back(big_json(c.to_index()));
    cands.push_back(Json{{"coeffs", std::move(coeffs)}});
  }
  j["finite_candidates"] = std::move(cands);
  Json ev = Json::array();
  for (const SpecializationEvidence& e : inst.evidence)
    ev.push_back(Json{{"extension", e.extension},
                      {"gamma_index", big_json(e.gamma_index)},
                      {"cycle_type", e.cycle_type},
                      {"even", e.even}});
  j["evidence"] = std::move(ev);
  j["all_types_even"] = inst.all_types_even;
  j["seed"] = inst.seed;
  return j;
}

Json nq_json(const NqSearchResult& res) {
  Json hits = Json::array();
  for (const NqHit& h : res.hits) {
    Json hit;
    hit["n"] = h.n;
    hit["kind"] = std::string(1, h.gamma_kind);
    hit["h"] = perm_group_json(h.h);
    hit["normalizer"] = perm_group_json(h.normalizer_group);
    hit["index"] = big_json(h.gamma_index);
    hit["quotient"] = h.quotient_name;
    hits.push_back(std::move(hit));
  }
  return Json{{"hits", std::move(hits)},
              {"budget_exhausted", res.budget_exhausted},
              {"last_completed_n", res.last_completed_n}};
}

Json realize_json(const RealizationCertificate& cert) {
  Json j;
  j["group"] = cert.group_name;
  j["strategy"] = to_string(cert.strategy);
  j["n"] = cert.n;
  j["kind"] = std::string(1, cert.gamma_kind);
  j["gamma_order"] = big_json(cert.gamma_order);
  j["h_order"] = big_json(cert.h_order);
  j["k_degree"] = big_json(cert.k_degree);
  j["k_is_base"] = cert.k_is_base;
  Json w;
  w["h"] = perm_group_json(cert.witness.h);
  w["normalizer"] = perm_group_json(cert.witness.normalizer);
  w["quotient"] = cert.witness.quotient.describe();
  w["iso"] = cert.witness.iso;
  j["witness"] = std::move(w);
  if (cert.schinzel) j["schinzel"] = schinzel_json(*cert.schinzel);
  if (cert.bms) j["bms"] = bms_json(*cert.bms);
  if (cert.ffield) j["ffield"] = ffield_json(*cert.ffield);
  if (cert.explicit_k)
    j["explicit_k"] = Json{{"g", poly_json(cert.explicit_k->g)},
                           {"irreducibility", irreducibility_json(cert.explicit_k->irreducibility)},
                           {"ramification", ramification_json(cert.explicit_k->ramification)}};
  j["note"] = cert.ramification_note;
  return j;
}

Json frucht_json(const FruchtRecipe& recipe, bool emit_graph) {
  Json j;
  j["group"] = recipe.group_name;
  j["generators"] = recipe.generators;
  j["padded"] = recipe.padded;
  j["n"] = recipe.n;
  j["graph"] = graph_json(recipe.graph);
  if (emit_graph) j["graph_text"] = recipe.graph.serialize();
  j["triple"] = bms_json(recipe.triple);
  j["declaration"] = recipe.field_declaration;
  return j;
}

}  // namespace minram::jio
