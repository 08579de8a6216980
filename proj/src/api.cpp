#include "plenoptic/api.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace plenoptic::api {

namespace {

constexpr std::array<std::string_view, 9> kConfigFields = {
    "pixel_pitch",       "micro_lens_pitch", "micro_lens_focal",
    "micro_image_resolution", "main_lens_focal", "hiatus",
    "exit_pupil_distance", "focus_distance", "image_distance"};

double number_field(const json& j, const char* name) {
  if (!j.contains(name)) {
    throw Error(ErrorCode::MissingField, std::string("config field '") + name + "' is missing");
  }
  const json& v = j.at(name);
  if (!v.is_number()) {
    throw Error(ErrorCode::InvalidJson, std::string("config field '") + name + "' must be a number");
  }
  return v.get<double>();
}

}  // namespace

json to_json(Distance d) {
  if (d.is_infinite()) return "inf";
  return d.mm();
}

json to_json(const Failure& failure) {
  return {{"name", failure.name()}, {"message", failure.message}};
}

json to_json(const RawConfig& raw) {
  json j = {{"pixel_pitch", raw.pixel_pitch},
            {"micro_lens_pitch", raw.micro_lens_pitch},
            {"micro_lens_focal", raw.micro_lens_focal},
            {"micro_image_resolution", raw.micro_image_resolution},
            {"main_lens_focal", raw.main_lens_focal},
            {"hiatus", raw.hiatus},
            {"exit_pupil_distance", raw.exit_pupil_distance}};
  if (raw.focus_distance) j["focus_distance"] = *raw.focus_distance;
  if (raw.image_distance) j["image_distance"] = *raw.image_distance;
  return j;
}

RawConfig raw_config_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidJson, "config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (std::find(kConfigFields.begin(), kConfigFields.end(), key) == kConfigFields.end()) {
      throw Error(ErrorCode::UnknownField, "unknown config field '" + key + "'");
    }
  }
  RawConfig raw;
  raw.pixel_pitch = number_field(j, "pixel_pitch");
  raw.micro_lens_pitch = number_field(j, "micro_lens_pitch");
  raw.micro_lens_focal = number_field(j, "micro_lens_focal");
  raw.main_lens_focal = number_field(j, "main_lens_focal");
  raw.hiatus = number_field(j, "hiatus");
  raw.exit_pupil_distance = number_field(j, "exit_pupil_distance");

  const double m = number_field(j, "micro_image_resolution");
  if (!j.at("micro_image_resolution").is_number_integer() && m != std::floor(m)) {
    throw Error(ErrorCode::InvalidJson, "micro_image_resolution must be an integer");
  }
  if (std::abs(m) > 1e6) throw Error(ErrorCode::InvalidJson, "micro_image_resolution out of range");
  raw.micro_image_resolution = static_cast<int>(m);

  if (j.contains("focus_distance")) raw.focus_distance = number_field(j, "focus_distance");
  if (j.contains("image_distance")) raw.image_distance = number_field(j, "image_distance");
  return raw;
}

json resolved_config_json(const CameraConfig& config) {
  json j = to_json(config.raw());
  j["resolved"] = {{"image_distance_from_h2u", config.image_distance()},
                   {"focus_distance_from_h1u", to_json(config.focus_distance())},
                   {"h2u_from_mla", config.h2u_position()},
                   {"h1u_from_mla", config.h1u_position()},
                   {"micro_image_center_index", config.center_index()}};
  return j;
}

json refocus_json(std::span<const RefocusEntry> entries) {
  json list = json::array();
  for (const RefocusEntry& e : entries) {
    json j = {{"a", e.a}, {"ok", e.ok()}};
    if (!e.ok()) {
      j["error"] = to_json(*e.failure);
      list.push_back(std::move(j));
      continue;
    }
    const RefocusResult& r = *e.result;
    j["elongation_mm"] = r.elongation;
    j["intersection_y_mm"] = r.intersection_y;
    j["effective_image_distance_from_h2u"] = r.effective_image_distance;
    j["d_a_from_h1u"] = to_json(r.object_distance_from_h1u);
    j["d_a_from_mla"] = to_json(r.distance_from_mla);
    if (e.dof) {
      j["dof"] = {{"near_from_h1u", to_json(e.dof->near_from_h1u)},
                  {"near_from_mla", to_json(e.dof->near_from_mla)},
                  {"far_from_h1u", to_json(e.dof->far_from_h1u)},
                  {"far_from_mla", to_json(e.dof->far_from_mla)}};
    } else {
      j["dof_error"] = to_json(*e.dof_failure);
    }
    list.push_back(std::move(j));
  }
  return list;
}

json triangulation_json(const TriangulationResult& result) {
  json planes = json::array();
  for (const PlaneEntry& p : result.planes) {
    json j = {{"disparity", p.disparity}, {"ok", p.ok()}};
    if (p.ok()) {
      j["z_from_h1u"] = to_json(p.plane->from_h1u);
      j["z_from_mla"] = to_json(p.plane->from_mla);
    } else {
      j["error"] = to_json(*p.failure);
    }
    planes.push_back(std::move(j));
  }
  return {{"gap", result.gap},
          {"baseline_mm", result.baseline},
          {"entrance_pupil_from_h1u", result.entrance_pupil_from_h1u},
          {"entrance_pupil_from_mla", result.entrance_pupil_from_mla},
          {"planes", std::move(planes)}};
}

bool any_failure(std::span<const RefocusEntry> entries) {
  return std::any_of(entries.begin(), entries.end(),
                     [](const RefocusEntry& e) { return !e.ok(); });
}

bool any_failure(const TriangulationResult& result) {
  return std::any_of(result.planes.begin(), result.planes.end(),
                     [](const PlaneEntry& p) { return !p.ok(); });
}

std::vector<double> number_list(const json& j, std::string_view field) {
  if (!j.is_array()) {
    throw Error(ErrorCode::InvalidJson, std::string(field) + " must be an array of numbers");
  }
  std::vector<double> out;
  out.reserve(j.size());
  for (const json& v : j) {
    if (!v.is_number() || !std::isfinite(v.get<double>())) {
      throw Error(ErrorCode::InvalidJson, std::string(field) + " must contain finite numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace plenoptic::api
