#pragma once

#include <string>

#include <json.hpp>

#include "gsnet/classify.hpp"
#include "gsnet/graph.hpp"
#include "gsnet/measurement.hpp"

namespace gsnet {

using nlohmann::json;

/// Canonical interchange schema:
/// {"vertices":[{"id":0,"label":"Sw0"},{"id":1}],"edges":[[0,1]]}
/// Vertices sorted by id, edges as sorted pairs in lexicographic order,
/// labels omitted where absent.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// {"steps":[{"basis":"X","target":3,"k0":2},{"basis":"Z","target":5}]}
json protocol_to_json(const Protocol& p);
Protocol protocol_from_json(const json& j);

json cost_to_json(const CostReport& cost);
json topology_to_json(const TopologyClass& cls);

/// Undirected DOT output; node names are the vertex labels where present,
/// otherwise the numeric id.
std::string graph_to_dot(const Graph& g);

}  // namespace gsnet
