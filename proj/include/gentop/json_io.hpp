#pragma once

#include <json.hpp>

#include "gentop/covers.hpp"
#include "gentop/embed.hpp"
#include "gentop/generators.hpp"
#include "gentop/lifts.hpp"
#include "gentop/report.hpp"
#include "gentop/separation.hpp"

namespace gentop::io {

using nlohmann::json;

json subset_to_json(const GroundSet& ground, Subset s);
Subset subset_from_json(const GroundSet& ground, const json& j, const std::string& where);
json family_to_json(const GroundSet& ground, const SetFamily& fam);

// Table keys: comma-joined labels, "" for the empty set.
std::string subset_key(const GroundSet& ground, Subset s);
Subset subset_from_key(const GroundSet& ground, const std::string& key, const std::string& where);

GroundSet ground_from_json(const json& j, const std::string& where);
json space_to_json(const Gts& g);
Gts space_from_json(const json& j);

json map_to_json(const GtsMap& f);
GtsMap map_from_json(const json& j);

GroundSet chain_from_json(const json& j);
ClosureOp closure_from_json(const json& j);
MonotoneMap gamma_from_json(const json& j);
json gamma_to_json(const MonotoneMap& g);
Enlargement enlargement_from_json(const json& j);
json enlargement_to_json(const Enlargement& k);
Gns gns_from_json(const json& j);
json gns_to_json(const Gns& psi);

json verdict_to_json(const Gts& g, const AxiomVerdict& v);
json trace_to_json(const GroundSet& ground, const IterationTrace& t);
json certificate_to_json(const Gts& g, const EmbeddingCertificate& c);
json report_to_json(const PropertyReport& r);

json parse_text(const std::string& text); // Parse error with position on failure

} // namespace gentop::io
