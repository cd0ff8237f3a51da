#pragma once

#include <json.hpp>

#include "lrw1/graph.hpp"
#include "lrw1/recognize.hpp"

namespace lrw1 {

/// {"status":"lrw_le_1","ordering":[...]} or
/// {"status":"lrw_ge_2","obstruction":{"vertices":[...],"family":...}}.
/// Vertices are written as g's labels.
nlohmann::json to_json(const Graph& g, const Certificate& c);

/// Inverse of to_json against the same graph. Throws Parse on a malformed
/// document or a label g does not have.
Certificate certificate_from_json(const Graph& g, const nlohmann::json& j);

}  // namespace lrw1
