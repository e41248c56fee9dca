#pragma once

// JSON encoding of the result types, private to the CLI layer. Conventions:
// arbitrary-precision integers as decimal strings, polynomial coefficient
// arrays lowest-first under "coeffs", permutations as 1-based cycle strings,
// enum statuses as lowercase tokens, schema version "v": 1.

#include "json.hpp"
#include "minram/bms.hpp"
#include "minram/ffield_family.hpp"
#include "minram/frucht_recipe.hpp"
#include "minram/graphs.hpp"
#include "minram/nq_search.hpp"
#include "minram/realize.hpp"
#include "minram/schinzel.hpp"

namespace minram::jio {

using Json = nlohmann::ordered_json;

Json big_json(const BigInt& x);
BigInt big_from_json(const Json& j);

Json poly_json(const PolyZ& f);
PolyZ poly_from_json(const Json& j);

Json perm_group_json(const PermGroup& g);
PermGroup perm_group_from_json(const Json& j);

Json irreducibility_json(const IrreducibilityOutcome& o);
Json galois_json(const GaloisCertificate& c);
Json ramification_json(const RamificationReport& r);
Json graph_json(const SimpleGraph& g);

Json schinzel_json(const SchinzelInstance& inst);
Json bms_json(const BmsTriple& t);
Json ffield_json(const FfieldInstance& inst);
Json nq_json(const NqSearchResult& res);
Json realize_json(const RealizationCertificate& cert);
Json frucht_json(const FruchtRecipe& recipe, bool emit_graph);

}  // namespace minram::jio
