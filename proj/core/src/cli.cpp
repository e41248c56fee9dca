#include "minram/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "minram/cache.hpp"
#include "minram/config.hpp"
#include "minram/errors.hpp"
#include "minram/factor_mod.hpp"
#include "minram/galois_certify.hpp"
#include "minram/group_spec.hpp"
#include "minram/primality.hpp"
#include "minram/ramification.hpp"
#include "minram/resultant.hpp"
#include "minram/zmod.hpp"

namespace minram::cli {
namespace {

using jio::Json;

// One flat bag of option storage; each subcommand binds the subset it owns.
// n = 0 stands for "use the subcommand default".
struct Opts {
  int n = 0;
  std::string a;
  int box = 3;
  long t_min = 1;
  long t_max = 100000;
  long p_max = 200;
  long q_max = 200;
  std::string q = "2";
  int specializations = 200;
  int max_extension = 3;
  int prime_bound = 10000;
  unsigned long seed = 0;
  int threads = 1;
  bool require_proven = false;
  bool require_inertia = false;
  std::string group;
  std::string strategy = "bms";
  std::string base;
  int n_max = 7;
  long budget_ms = 0;
  bool no_explicit_k = false;
  bool emit_graph = false;
  int graph_budget = 256;
  std::string coeffs;
  long trial_bound = 1000000;
  long index = -1;
  std::string cache_path;
  std::string config_path;
  std::string output_path;
};

std::vector<BigInt> parse_big_list(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::size_t b = item.find_first_not_of(" \t");
    const std::size_t e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw input_error("empty entry in integer list: " + text);
    item = item.substr(b, e - b + 1);
    try {
      out.emplace_back(item);
    } catch (const std::invalid_argument&) {
      throw input_error("not an integer: " + item);
    }
  }
  if (out.empty()) throw input_error("expected a comma-separated integer list");
  return out;
}

BigInt parse_big(const std::string& text) {
  try {
    return BigInt(text);
  } catch (const std::invalid_argument&) {
    throw input_error("not an integer: " + text);
  }
}

Json big_list_json(const std::vector<BigInt>& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(jio::big_json(x));
  return arr;
}

std::vector<BigInt> big_list_from_json(const Json& j) {
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(jio::big_from_json(x));
  return out;
}

int require_range(const Json& p, const char* key, int lo, int hi) {
  const int v = p.at(key).get<int>();
  if (v < lo || v > hi)
    throw input_error(std::string(key) + " must lie in [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  return v;
}

// ---------------------------------------------------------------------------
// Claim checks. Each subcommand re-derives the headline facts of its payload
// from scratch so a defective search path cannot emit an unsupported document.

void check_galois_certified(const GaloisCertificate& cert, const std::string& who) {
  if (cert.status != GaloisStatus::certified_sn)
    throw verification_error(who + ": reported group is not certified S_n");
}

void check_schinzel_claims(const SchinzelInstance& inst) {
  PolyZT family = build_f(inst.n, inst.a);
  std::vector<BigInt> at_t;
  for (int i = 0; i <= family.degree(); ++i) at_t.push_back(family.coeff(i).eval(inst.t));
  if (PolyZ(at_t) != inst.f)
    throw verification_error("schinzel: f does not match the family at t");
  if (compute_h(inst.n, inst.a).eval(inst.t) != inst.h_value)
    throw verification_error("schinzel: H(a,t) does not match the reported value");
  if (discriminant(inst.f) != inst.h_value)
    throw verification_error("schinzel: disc f != H(a,t)");
  if (classify_prime(abs(inst.h_value)) == Primality::composite)
    throw verification_error("schinzel: |H(a,t)| is composite");
  check_galois_certified(inst.galois, "schinzel");
  if (!inst.ramification.all_real)
    throw verification_error("schinzel: not totally real");
  int ramified = 0;
  for (const auto& pl : inst.ramification.finite) {
    if (pl.status != PlaceStatus::ramified) continue;
    ++ramified;
    if (pl.prime != abs(inst.h_value))
      throw verification_error("schinzel: ramified prime differs from |H(a,t)|");
  }
  if (ramified != 1) throw verification_error("schinzel: ramified place count != 1");
}

void check_bms_claims(const BmsTriple& t) {
  BigInt nn = 1, mm = 1;
  for (int i = 0; i < t.n; ++i) nn *= t.n;
  for (int i = 0; i < t.n - 1; ++i) mm *= t.n - 1;
  if (t.r != nn * t.p + mm * t.q)
    throw verification_error("bms: r != n^n p + (n-1)^(n-1) q");
  for (const BigInt* x : {&t.p, &t.q, &t.r})
    if (classify_prime(*x) == Primality::composite)
      throw verification_error("bms: triple member is composite");
  if (t.stem != bms_stem(t.n, t.p, t.q))
    throw verification_error("bms: stem does not match the triple");
  check_galois_certified(t.galois, "bms");
  for (const auto& pl : t.ramification.finite)
    if (pl.status == PlaceStatus::ramified && pl.prime != t.p && pl.prime != t.q &&
        pl.prime != t.r)
      throw verification_error("bms: ramified prime outside {p, q, r}");
  const bool inertia =
      discriminant(t.stem) % t.r == 0 && transposition_inertia_check(t.stem, t.r);
  if (inertia != t.inertia_at_r)
    throw verification_error("bms: inertia flag does not match stem mod r");
}

void check_ffield_claims(const FfieldInstance& inst) {
  bool all_even = true;
  for (const auto& ev : inst.evidence) {
    int transpositions = 0;
    for (int len : ev.cycle_type) transpositions += len - 1;
    const bool even = transpositions % 2 == 0;
    if (even != ev.even)
      throw verification_error("ffield: evidence parity flag is wrong");
    all_even = all_even && even;
  }
  if (all_even != inst.all_types_even)
    throw verification_error("ffield: all_types_even does not match the evidence");
}

void check_nq_claims(const NqSearchResult& res, const AbstractGroup& target) {
  for (const auto& hit : res.hits) {
    for (const auto& g : hit.h.generators())
      if (!hit.gamma.contains(g))
        throw verification_error("nq: H is not inside Gamma");
    for (const auto& g : hit.normalizer_group.generators()) {
      if (!hit.gamma.contains(g))
        throw verification_error("nq: normalizer is not inside Gamma");
      for (const auto& h : hit.h.generators())
        if (!hit.h.contains(g * h * g.inverse()))
          throw verification_error("nq: reported normalizer does not normalize H");
    }
    if (hit.gamma_index * hit.h.order() != hit.gamma.order())
      throw verification_error("nq: [Gamma : H] is wrong");
    AbstractGroup quo = quotient_group(hit.normalizer_group, hit.h);
    if (!quo.is_isomorphic_to(target))
      throw verification_error("nq: N/H is not isomorphic to the target");
  }
}

void check_frucht_claims(const FruchtRecipe& recipe, const AbstractGroup& target,
                         int graph_budget) {
  PermGroup aut = graph_automorphisms(recipe.graph, graph_budget);
  if (!AbstractGroup::from_perm_group(aut).is_isomorphic_to(target))
    throw verification_error("frucht: Aut(graph) is not isomorphic to the target");
  if (recipe.n != recipe.graph.n || recipe.triple.n != recipe.n)
    throw verification_error("frucht: vertex count disagrees with the triple degree");
  if (!recipe.triple.inertia_at_r)
    throw verification_error("frucht: triple lacks the inertia witness");
  check_bms_claims(recipe.triple);
}

// ---------------------------------------------------------------------------
// Execution. Each kind maps a params document to a payload document; verify
// re-runs the same functions on cached params and compares payloads.

SchinzelParams schinzel_params_of(const Json& p, int threads) {
  SchinzelParams sp;
  sp.n = require_range(p, "n", 2, 12);
  sp.a_box = require_range(p, "box", 0, 64);
  sp.t_min = p.at("t_min").get<long>();
  sp.t_max = p.at("t_max").get<long>();
  sp.prime_budget = p.at("prime_bound").get<int>();
  sp.seed = p.at("seed").get<unsigned long>();
  sp.require_proven = p.at("require_proven").get<bool>();
  sp.threads = threads;
  return sp;
}

Json execute_schinzel(const Json& p, int threads) {
  SchinzelParams sp = schinzel_params_of(p, threads);
  std::optional<std::vector<BigInt>> pinned;
  if (p.contains("a")) {
    pinned = big_list_from_json(p.at("a"));
    if (static_cast<int>(pinned->size()) != sp.n)
      throw input_error("--a needs exactly n entries");
  }
  SchinzelInstance inst = schinzel_search(sp, pinned ? &*pinned : nullptr);
  check_schinzel_claims(inst);
  return jio::schinzel_json(inst);
}

BmsParams bms_params_of(const Json& p, int threads) {
  BmsParams bp;
  bp.n = require_range(p, "n", 2, 16);
  bp.p_max = p.at("p_max").get<long>();
  bp.q_max = p.at("q_max").get<long>();
  bp.prime_budget = p.at("prime_bound").get<int>();
  bp.seed = p.at("seed").get<unsigned long>();
  bp.require_proven = p.at("require_proven").get<bool>();
  bp.require_inertia = p.at("require_inertia").get<bool>();
  bp.threads = threads;
  return bp;
}

Json execute_bms(const Json& p, int threads) {
  BmsTriple triple = bms_search(bms_params_of(p, threads));
  check_bms_claims(triple);
  return jio::bms_json(triple);
}

FfieldParams ffield_params_of(const Json& p) {
  FfieldParams fp;
  fp.n = p.at("n").get<int>();
  fp.q = jio::big_from_json(p.at("q"));
  fp.specializations = p.at("specializations").get<int>();
  fp.max_extension = p.at("max_extension").get<int>();
  fp.seed = p.at("seed").get<unsigned long>();
  return fp;
}

Json execute_ffield(const Json& p, int) {
  FfieldInstance inst = function_field_family(ffield_params_of(p));
  check_ffield_claims(inst);
  return jio::ffield_json(inst);
}

Json execute_nq(const Json& p, int) {
  GroupSpec spec = parse_group_spec(p.at("group").get<std::string>());
  const int pinned = p.at("n").get<int>();
  if (pinned < 0 || pinned > 8)
    throw input_error("n must lie in [2, 8] (0 scans up to n-max)");
  const int n_min = pinned > 0 ? pinned : 2;
  const int n_max = pinned > 0 ? pinned : require_range(p, "n_max", 2, 8);
  NqSearchResult res =
      find_normalizer_quotients(spec.group, n_min, n_max, p.at("budget_ms").get<long>());
  if (res.hits.empty())
    throw not_found_error("no normalizer quotient found for " + spec.source +
                          " with n <= " + std::to_string(n_max) +
                          (res.budget_exhausted ? " (budget exhausted)" : ""));
  check_nq_claims(res, spec.group);
  return jio::nq_json(res);
}

Json execute_realize(const Json& p, int threads) {
  GroupSpec spec = parse_group_spec(p.at("group").get<std::string>());
  RealizeOptions ro;
  ro.strategy = realize_strategy_from_string(p.at("strategy").get<std::string>());
  if (p.contains("base")) {
    const std::string base = p.at("base").get<std::string>();
    const bool number_field = base == "Q";
    if (!number_field && base != "Fq(T)")
      throw input_error("--base must be Q or Fq(T)");
    if (number_field && ro.strategy == RealizeStrategy::ffield)
      throw input_error("base Q needs the schinzel or bms strategy");
    if (!number_field && ro.strategy != RealizeStrategy::ffield)
      throw input_error("base Fq(T) needs the ffield strategy");
  }
  ro.n = p.at("n").get<int>();
  ro.n_max = require_range(p, "n_max", 2, 8);
  ro.prefer_explicit_k = p.at("prefer_explicit_k").get<bool>();
  ro.group_budget_ms = p.at("budget_ms").get<long>();
  // The pipelines receive placeholder degrees; realize() overwrites them with
  // the symbol count it settles on.
  Json pipe = p;
  pipe["n"] = 2;
  ro.schinzel = schinzel_params_of(pipe, threads);
  ro.bms = bms_params_of(pipe, threads);
  pipe["n"] = 9;
  ro.ffield = ffield_params_of(pipe);
  RealizationCertificate cert = realize(spec, ro);
  verify_certificate(cert, spec.group);
  return jio::realize_json(cert);
}

Json execute_frucht(const Json& p, int threads) {
  GroupSpec spec = parse_group_spec(p.at("group").get<std::string>());
  FruchtParams fp;
  fp.bms = bms_params_of(p, threads);
  fp.graph_budget = p.at("graph_budget").get<int>();
  FruchtRecipe recipe = frucht_field_recipe(spec, fp);
  check_frucht_claims(recipe, spec.group, fp.graph_budget);
  return jio::frucht_json(recipe, p.at("emit_graph").get<bool>());
}

Json execute_galois(const Json& p, int) {
  PolyZ f = jio::poly_from_json(p.at("f"));
  GaloisCertificate cert =
      galois_certify(f, p.at("seed").get<unsigned long>(), p.at("prime_bound").get<int>());
  Json out;
  out["f"] = jio::poly_json(f);
  out["certificate"] = jio::galois_json(cert);
  return out;
}

Json execute_ramify(const Json& p, int) {
  PolyZ f = jio::poly_from_json(p.at("f"));
  RamificationReport report = ramified_primes(f, p.at("trial_bound").get<unsigned long>());
  Json out;
  out["f"] = jio::poly_json(f);
  out["report"] = jio::ramification_json(report);
  return out;
}

Json execute_kind(const std::string& kind, const Json& params, int threads) {
  if (kind == "schinzel") return execute_schinzel(params, threads);
  if (kind == "bms") return execute_bms(params, threads);
  if (kind == "ffield") return execute_ffield(params, threads);
  if (kind == "nq") return execute_nq(params, threads);
  if (kind == "realize") return execute_realize(params, threads);
  if (kind == "frucht") return execute_frucht(params, threads);
  if (kind == "galois") return execute_galois(params, threads);
  if (kind == "ramify") return execute_ramify(params, threads);
  throw input_error("unknown cache record kind: " + kind);
}

// ---------------------------------------------------------------------------
// Params documents. Every input that affects the payload is echoed here;
// execution knobs (threads, cache, output) are deliberately left out so a
// record re-runs identically regardless of how it was scheduled.

Json schinzel_params_json(const Opts& o) {
  Json p;
  p["n"] = o.n == 0 ? 2 : o.n;
  p["box"] = o.box;
  if (!o.a.empty()) p["a"] = big_list_json(parse_big_list(o.a));
  p["t_min"] = o.t_min;
  p["t_max"] = o.t_max;
  p["prime_bound"] = o.prime_bound;
  p["seed"] = o.seed;
  p["require_proven"] = o.require_proven;
  return p;
}

Json bms_params_json(const Opts& o) {
  Json p;
  p["n"] = o.n == 0 ? 2 : o.n;
  p["p_max"] = o.p_max;
  p["q_max"] = o.q_max;
  p["prime_bound"] = o.prime_bound;
  p["seed"] = o.seed;
  p["require_proven"] = o.require_proven;
  p["require_inertia"] = o.require_inertia;
  return p;
}

Json ffield_params_json(const Opts& o) {
  Json p;
  p["n"] = o.n == 0 ? 9 : o.n;
  p["q"] = jio::big_json(parse_big(o.q));
  p["specializations"] = o.specializations;
  p["max_extension"] = o.max_extension;
  p["seed"] = o.seed;
  return p;
}

Json nq_params_json(const Opts& o) {
  if (o.group.empty()) throw input_error("nq-search requires --group");
  Json p;
  p["group"] = o.group;
  p["n"] = o.n;
  p["n_max"] = o.n_max;
  p["budget_ms"] = o.budget_ms;
  return p;
}

Json realize_params_json(const Opts& o) {
  if (o.group.empty()) throw input_error("realize requires --group");
  Json p;
  p["group"] = o.group;
  p["strategy"] = o.strategy;
  if (!o.base.empty()) p["base"] = o.base;
  p["n"] = o.n;
  p["n_max"] = o.n_max;
  p["prefer_explicit_k"] = !o.no_explicit_k;
  p["budget_ms"] = o.budget_ms;
  p["box"] = o.box;
  p["t_min"] = o.t_min;
  p["t_max"] = o.t_max;
  p["p_max"] = o.p_max;
  p["q_max"] = o.q_max;
  p["q"] = jio::big_json(parse_big(o.q));
  p["specializations"] = o.specializations;
  p["max_extension"] = o.max_extension;
  p["prime_bound"] = o.prime_bound;
  p["seed"] = o.seed;
  p["require_proven"] = o.require_proven;
  p["require_inertia"] = false;
  return p;
}

Json frucht_params_json(const Opts& o) {
  if (o.group.empty()) throw input_error("frucht requires --group");
  Json p;
  p["group"] = o.group;
  // Placeholder degree; the recipe overwrites it with the vertex count.
  p["n"] = 2;
  p["p_max"] = o.p_max;
  p["q_max"] = o.q_max;
  p["prime_bound"] = o.prime_bound;
  p["seed"] = o.seed;
  p["require_proven"] = o.require_proven;
  p["require_inertia"] = true;
  p["graph_budget"] = o.graph_budget;
  p["emit_graph"] = o.emit_graph;
  return p;
}

Json poly_params_json(const Opts& o, bool galois) {
  if (o.coeffs.empty()) throw input_error("expected --coeffs with the polynomial");
  Json p;
  p["f"] = jio::poly_json(PolyZ(parse_big_list(o.coeffs)));
  if (galois) {
    p["seed"] = o.seed;
    p["prime_bound"] = o.prime_bound;
  } else {
    p["trial_bound"] = o.trial_bound;
  }
  return p;
}

Json run_verify(const Opts& o, std::ostream& err, int* exit_code) {
  const std::string path = resolve_cache_path(o.cache_path);
  if (path.empty()) throw input_error("verify needs --cache or MINRAM_CACHE");
  std::vector<CacheRecord> records = read_cache_records(path);
  Json results = Json::array();
  int mismatches = 0;
  int checked = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (o.index >= 0 && static_cast<long>(i) != o.index) continue;
    const CacheRecord& rec = records[i];
    Json params = Json::parse(rec.params);
    Json stored = Json::parse(rec.payload);
    Json entry;
    entry["index"] = i;
    entry["kind"] = rec.kind;
    bool ok = false;
    try {
      Json fresh = execute_kind(rec.kind, params, o.threads);
      ok = fresh == stored;
      if (!ok) entry["reason"] = "payload differs on re-run";
    } catch (const error& e) {
      entry["reason"] = e.what();
    }
    entry["match"] = ok;
    results.push_back(entry);
    ++checked;
    if (!ok) {
      ++mismatches;
      err << "record " << i << " (" << rec.kind << ") failed verification\n";
    }
  }
  if (o.index >= 0 && checked == 0)
    throw input_error("cache has no record with index " + std::to_string(o.index));
  Json payload;
  payload["cache"] = path;
  payload["records"] = records.size();
  payload["checked"] = checked;
  payload["mismatches"] = mismatches;
  payload["results"] = results;
  *exit_code = mismatches == 0 ? 0 : 3;
  return payload;
}

// ---------------------------------------------------------------------------
// Option wiring.

void add_common(CLI::App* sub, Opts& o) {
  sub->add_option("--cache", o.cache_path, "append the result to this JSON-lines cache");
  sub->add_option("--config", o.config_path, "key = value defaults file");
  sub->add_option("--output", o.output_path, "also write the document to this file");
}

void add_schinzel_opts(CLI::App* sub, Opts& o) {
  sub->add_option("--a", o.a, "pin the coefficient vector, e.g. 1,-1");
  sub->add_option("--box", o.box, "coefficient box |a_i| <= box")->capture_default_str();
  sub->add_option("--t-min", o.t_min, "first specialization value")->capture_default_str();
  sub->add_option("--t-max", o.t_max, "last specialization value")->capture_default_str();
}

void add_bms_opts(CLI::App* sub, Opts& o) {
  sub->add_option("--p-max", o.p_max, "largest p to scan")->capture_default_str();
  sub->add_option("--q-max", o.q_max, "largest q to scan")->capture_default_str();
}

void add_ffield_opts(CLI::App* sub, Opts& o) {
  sub->add_option("--q", o.q, "base field size, a power of 2")->capture_default_str();
  sub->add_option("--specializations", o.specializations,
                  "number of sampled specializations")
      ->capture_default_str();
  sub->add_option("--max-extension", o.max_extension,
                  "sample gamma up to F_(q^k) with this k")
      ->capture_default_str();
}

void add_search_knobs(CLI::App* sub, Opts& o) {
  sub->add_option("--prime-bound", o.prime_bound, "witness prime budget")
      ->capture_default_str();
  sub->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
  sub->add_option("--threads", o.threads, "worker threads")->capture_default_str();
  sub->add_flag("--require-proven", o.require_proven,
                "reject candidates whose primality is only probable");
}

struct Parsed {
  std::string command;
  Json params;
};

Parsed build_params(const std::string& name, const Opts& o) {
  if (name == "schinzel") return {"schinzel", schinzel_params_json(o)};
  if (name == "bms") return {"bms", bms_params_json(o)};
  if (name == "ffield") return {"ffield", ffield_params_json(o)};
  if (name == "nq-search") return {"nq-search", nq_params_json(o)};
  if (name == "realize") return {"realize", realize_params_json(o)};
  if (name == "frucht") return {"frucht", frucht_params_json(o)};
  if (name == "galois") return {"galois", poly_params_json(o, true)};
  if (name == "ramify") return {"ramify", poly_params_json(o, false)};
  throw input_error("unknown subcommand: " + name);
}

const char* cache_kind(const std::string& command) {
  return command == "nq-search" ? "nq" : command.c_str();
}

bool truthy(const std::string& v) {
  return v == "1" || v == "true" || v == "yes" || v == "on";
}

// Injects config-file defaults as synthetic argv entries for every option the
// chosen subcommand knows and the command line did not set.
void inject_config(const RunConfig& cfg, CLI::App& app, const std::string& sub_name,
                   std::vector<std::string>& args) {
  CLI::App* sub = app.get_subcommand_no_throw(sub_name);
  if (sub == nullptr) return;
  for (const auto& [key, value] : cfg.values) {
    const std::string flag = "--" + key;
    CLI::Option* opt = sub->get_option_no_throw(flag);
    if (opt == nullptr) continue;
    bool given = false;
    for (const auto& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) given = true;
    if (given) continue;
    if (opt->get_expected_min() == 0) {
      if (truthy(value)) args.push_back(flag);
    } else {
      args.push_back(flag + "=" + value);
    }
  }
}

std::string find_config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return "";
}

void emit_document(const Json& doc, const Opts& o, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  out << text;
  if (!o.output_path.empty()) {
    std::ofstream file(o.output_path);
    if (!file) throw input_error("cannot write output file: " + o.output_path);
    file << text;
  }
}

int run_parsed(const std::string& name, const Opts& o, std::ostream& out,
               std::ostream& err) {
  Json doc;
  doc["v"] = 1;
  doc["command"] = name;
  if (name == "verify") {
    int code = 0;
    Json payload = run_verify(o, err, &code);
    doc["params"] = Json{{"index", o.index}};
    doc["result"] = payload;
    emit_document(doc, o, out);
    return code;
  }
  Parsed parsed = build_params(name, o);
  doc["params"] = parsed.params;
  Json payload = execute_kind(cache_kind(name), parsed.params, o.threads);
  doc["result"] = payload;
  emit_document(doc, o, out);
  const std::string cache = resolve_cache_path(o.cache_path);
  if (!cache.empty()) {
    CacheRecord rec;
    rec.kind = cache_kind(name);
    rec.params = parsed.params.dump();
    rec.payload = payload.dump();
    append_cache_record(cache, rec);
  }
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  Opts o;
  CLI::App app{"Realizes finite groups as automorphism groups of field "
               "extensions with minimal ramification"};
  app.name("minram");
  app.require_subcommand(1);

  CLI::App* realize_cmd = app.add_subcommand(
      "realize", "find Gamma, H with N(H)/H isomorphic to the target and name K");
  realize_cmd->add_option("--group", o.group, "target group: name, generators, or @table");
  realize_cmd->add_option("--strategy", o.strategy, "schinzel | bms | ffield")
      ->capture_default_str();
  realize_cmd->add_option("--base", o.base, "Q or Fq(T); must match the strategy");
  realize_cmd->add_option("--n", o.n, "pin the symbol count (0 scans upward)");
  realize_cmd->add_option("--n-max", o.n_max, "largest symbol count to scan")
      ->capture_default_str();
  realize_cmd->add_option("--budget-ms", o.budget_ms, "group-search time budget, 0 = none");
  realize_cmd->add_flag("--no-explicit-k", o.no_explicit_k,
                        "skip the explicit K-polynomial even when available");
  add_schinzel_opts(realize_cmd, o);
  add_bms_opts(realize_cmd, o);
  add_ffield_opts(realize_cmd, o);
  add_search_knobs(realize_cmd, o);
  add_common(realize_cmd, o);

  CLI::App* schinzel_cmd =
      app.add_subcommand("schinzel", "totally real S_n field with one ramified prime");
  schinzel_cmd->add_option("--n", o.n, "degree of the family (default 2)");
  add_schinzel_opts(schinzel_cmd, o);
  add_search_knobs(schinzel_cmd, o);
  add_common(schinzel_cmd, o);

  CLI::App* bms_cmd =
      app.add_subcommand("bms", "prime triple r = n^n p + (n-1)^(n-1) q with S_n stem");
  bms_cmd->add_option("--n", o.n, "stem degree (default 2)");
  add_bms_opts(bms_cmd, o);
  bms_cmd->add_flag("--require-inertia", o.require_inertia,
                    "keep only triples with a transposition at r");
  add_search_knobs(bms_cmd, o);
  add_common(bms_cmd, o);

  CLI::App* ffield_cmd = app.add_subcommand(
      "ffield", "everywhere-unramified family X^n + T X^(n-4) + 1 over F_q(T)");
  ffield_cmd->add_option("--n", o.n, "family degree, 1 mod 8 (default 9)");
  add_ffield_opts(ffield_cmd, o);
  ffield_cmd->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
  add_common(ffield_cmd, o);

  CLI::App* frucht_cmd = app.add_subcommand(
      "frucht", "graph with the target automorphism group plus a field recipe");
  frucht_cmd->add_option("--group", o.group, "target group: name, generators, or @table");
  add_bms_opts(frucht_cmd, o);
  frucht_cmd->add_option("--graph-budget", o.graph_budget,
                         "vertex cap for automorphism verification")
      ->capture_default_str();
  frucht_cmd->add_flag("--emit-graph", o.emit_graph, "include the text form of the graph");
  add_search_knobs(frucht_cmd, o);
  add_common(frucht_cmd, o);

  CLI::App* nq_cmd = app.add_subcommand(
      "nq-search", "subgroups H of S_n or A_n with N(H)/H isomorphic to the target");
  nq_cmd->add_option("--group", o.group, "target group: name, generators, or @table");
  nq_cmd->add_option("--n", o.n, "pin the symbol count (0 scans 2..n-max)");
  nq_cmd->add_option("--n-max", o.n_max, "largest symbol count")->capture_default_str();
  nq_cmd->add_option("--budget-ms", o.budget_ms, "time budget, 0 = none");
  add_common(nq_cmd, o);

  CLI::App* galois_cmd =
      app.add_subcommand("galois", "certify the Galois group of a monic integer polynomial");
  galois_cmd->add_option("--coeffs", o.coeffs, "coefficients, lowest first, e.g. 28,-15,1");
  galois_cmd->add_option("--prime-bound", o.prime_bound, "witness prime budget")
      ->capture_default_str();
  galois_cmd->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
  add_common(galois_cmd, o);

  CLI::App* ramify_cmd =
      app.add_subcommand("ramify", "classify the ramified places of a stem field");
  ramify_cmd->add_option("--coeffs", o.coeffs, "coefficients, lowest first");
  ramify_cmd->add_option("--trial-bound", o.trial_bound,
                         "trial-division bound for disc factoring")
      ->capture_default_str();
  add_common(ramify_cmd, o);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "re-run every cached record and compare payloads");
  verify_cmd->add_option("--index", o.index, "check a single record (0-based)");
  verify_cmd->add_option("--threads", o.threads, "worker threads")->capture_default_str();
  add_common(verify_cmd, o);

  std::string command;
  try {
    std::vector<std::string> argv = args;
    const std::string config_path = find_config_path(argv);
    if (!config_path.empty() && !argv.empty() && argv.front().rfind('-', 0) != 0) {
      RunConfig cfg = load_run_config(config_path);
      inject_config(cfg, app, argv.front(), argv);
    }
    std::reverse(argv.begin(), argv.end());
    try {
      app.parse(argv);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
    command = app.get_subcommands().front()->get_name();
    return run_parsed(command, o, out, err);
  } catch (const not_found_error& e) {
    Json doc{{"v", 1}, {"command", command}, {"error", {{"type", "not-found"}, {"message", e.what()}}}};
    out << doc.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const resource_error& e) {
    Json doc{{"v", 1}, {"command", command}, {"error", {{"type", "resource"}, {"message", e.what()}}}};
    out << doc.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const verification_error& e) {
    Json doc{{"v", 1}, {"command", command}, {"error", {{"type", "verification"}, {"message", e.what()}}}};
    out << doc.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const input_error& e) {
    Json doc{{"v", 1}, {"command", command}, {"error", {{"type", "input"}, {"message", e.what()}}}};
    out << doc.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json doc{{"v", 1}, {"command", command}, {"error", {{"type", "error"}, {"message", e.what()}}}};
    out << doc.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace minram::cli
