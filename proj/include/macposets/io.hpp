#pragma once

#include <string>

#include <json.hpp>

#include "macposets/macaulay.hpp"
#include "macposets/monomial_poset.hpp"
#include "macposets/poset.hpp"
#include "macposets/poset_ops.hpp"

namespace macposets {

// Poset file: {"elements": [labels...], "covers": [[lower, upper]...]}.
nlohmann::json poset_to_json(const Poset& p);
Poset poset_from_json(const nlohmann::json& j);

// Ring file: {"vars": [...], "field": "QQ" | {"Fp": prime}, "ideal": [polynomial strings]}.
nlohmann::json ring_to_json(const IdealPresentation& ring);
IdealPresentation ring_from_json(const nlohmann::json& j);

// Map file: {"domain": <poset|path>, "codomain": <poset|path>,
//            "images": [[domainLabel, codomainLabel]...]}.
// String values are paths resolved relative to base_dir.
PosetMap poset_map_from_json(const nlohmann::json& j, const std::string& base_dir);

nlohmann::json class_to_json(const MonomialClass& c, const std::vector<std::string>& vars);

Poset load_poset(const std::string& path);
IdealPresentation load_ring(const std::string& path);
PosetMap load_poset_map(const std::string& path);
nlohmann::json load_json(const std::string& path);

}  // namespace macposets
