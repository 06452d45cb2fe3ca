#pragma once

// JSON mapping shared by the document reader and the HTTP service.

#include <json.hpp>

#include "lightsout/graph.hpp"

namespace lightsout::detail {

using json = nlohmann::ordered_json;

json graph_to_json(const Graph& g);

/// Throws DocumentError on missing keys or wrong types; validates the graph.
Graph graph_from_json(const json& j);

}  // namespace lightsout::detail
