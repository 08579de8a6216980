#pragma once

// JSON representation shared by the CLI and the HTTP service, so both emit
// field-for-field identical results.

#include <span>
#include <string>

#include "json.hpp"
#include "plenoptic/camera_config.hpp"
#include "plenoptic/distance.hpp"
#include "plenoptic/error.hpp"
#include "plenoptic/refocus.hpp"
#include "plenoptic/triangulate.hpp"

namespace plenoptic::api {

using nlohmann::json;

/// Finite distances become numbers, INFINITY the string "inf".
json to_json(Distance d);
json to_json(const Failure& failure);
json to_json(const RawConfig& raw);

/// Parses the CameraConfig schema. Unknown fields, missing fields and wrong
/// types are rejected (UnknownField, MissingField, InvalidJson).
RawConfig raw_config_from_json(const json& j);

/// Validated config echo with the resolved image and focus distances.
json resolved_config_json(const CameraConfig& config);

json refocus_json(std::span<const RefocusEntry> entries);
json triangulation_json(const TriangulationResult& result);

bool any_failure(std::span<const RefocusEntry> entries);
bool any_failure(const TriangulationResult& result);

/// Parses a JSON number list (shift or disparity values).
std::vector<double> number_list(const json& j, std::string_view field);

}  // namespace plenoptic::api
