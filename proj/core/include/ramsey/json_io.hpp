#pragma once

#include <json.hpp>

#include "ramsey/blocks.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/congruence.hpp"
#include "ramsey/groups.hpp"
#include "ramsey/pointset.hpp"
#include "ramsey/polygons.hpp"
#include "ramsey/theorem3.hpp"

namespace ramsey {

using nlohmann::json;

// All indices and letters in the JSON formats are 1-based.

json to_json(const Template& t);
Template template_from_json(const json& j);

json to_json(const BlockSystem& bs);
BlockSystem block_system_from_json(const json& j);

json to_json(const Colouring& c); // tables and formulas only
Colouring colouring_from_json(const json& j);

json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

json to_json(const PointSet& p);
PointSet pointset_from_json(const json& j);

json to_json(const CyclicPolygon& p);
CyclicPolygon cyclic_polygon_from_json(const json& j);

json to_json(const CongruenceWitness& w); // 1-based mapping
CongruenceWitness congruence_witness_from_json(const json& j);

json to_json(const PipelineTrace& trace);

// Parse failures raise DomainError with a readable message.
json parse_json(const std::string& text);

} // namespace ramsey
