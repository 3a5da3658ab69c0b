#pragma once

#include <json.hpp>
#include <string>
#include <variant>

#include "strop/corpus.hpp"
#include "strop/quotient.hpp"
#include "strop/relations.hpp"

namespace strop {

using json = nlohmann::json;

json load_json_file(const std::string& path);

// ---- bipotent ----
json to_json(const FiniteBipotent& m);
AnyBipotent bipotent_from_json(const json& doc);
FiniteBipotent finite_bipotent_from_json(const json& doc);  // throws Malformed for infinite variants

// ---- supertropical ----
using AnySupertropical = std::variant<FiniteSupertropical, Constructed<RationalMaxPlus>, Constructed<LexPower>,
                                      Constructed<UnitIntervalMul>, Constructed<NaturalMaxTimes>>;

json to_json(const FiniteSupertropical& u);
// Variants: finite, doubled, constructed, cover, ghost_extended. A string is
// read as a corpus name (file <corpus>/<name>.json, else a built-in).
AnySupertropical supertropical_from_json(const json& doc);
FiniteSupertropical finite_supertropical_from_json(const json& doc);
FiniteSupertropical resolve_carrier(const std::string& name_or_path);

// ---- rings and valuations ----
json to_json(const FiniteRing& r);
FiniteRing ring_from_json(const json& doc);
json to_json(const FiniteMValuation& v);
FiniteMValuation m_valuation_from_json(const json& doc);

// ---- maps ----
// "a->1, 1->1" or {"a":"1"}; unlisted ghosts keep their name in the target.
FiniteGhostHom ghost_hom_from_json(const FiniteBipotent& source, const FiniteBipotent& target, const json& map);
json to_json(const FiniteTransmission& a);

// ---- relations and ideals ----
// {"partition": [[names]]} or {"family": ..., params}. Phi blocks and ideal
// members are element names of u.
Partition relation_from_json(const FiniteSupertropical& u, const json& doc);
Subset ideal_from_json(const FiniteSupertropical& u, const json& doc);
json to_json(const Partition& p, const std::vector<std::string>& names);
json to_json(const FiniteSupertropical& u, const Subset& s);

// ---- whole documents ----

// Validates any corpus document by its kind: supertropical, bipotent, ring,
// m_valuation, ideal (finite or interval) or rule_valuation. Infinite
// carriers are sampled with cfg.
ValidationReport validate_document(const json& doc, const SampleConfig& cfg = {});

// ---- reports ----
json to_json(const ValidationReport& r);
json to_json(const RelationClassification& c);
json to_json(const QuotientResult& q);

}  // namespace strop
