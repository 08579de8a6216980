#include "plenoptic/scene.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <string>

#include "json.hpp"
#include "plenoptic/error.hpp"
#include "plenoptic/geometry.hpp"
#include "plenoptic/refocus.hpp"
#include "plenoptic/triangulate.hpp"

namespace plenoptic::scene {

using nlohmann::json;

namespace {

// Shortest round-trip form: 1 -> "1", -0.5 -> "-0.5".
std::string number_tag(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Element plane(std::string id, double z, std::string label) {
  Element e;
  e.id = std::move(id);
  e.type = ElementType::Plane;
  e.z = z;
  e.label = std::move(label);
  return e;
}

Element segment(std::string id, Point2 from, Point2 to, std::string label) {
  Element e;
  e.id = std::move(id);
  e.type = ElementType::RaySegment;
  e.from = from;
  e.to = to;
  e.label = std::move(label);
  return e;
}

Element point(std::string id, Point2 at, std::string label) {
  Element e;
  e.id = std::move(id);
  e.type = ElementType::Point;
  e.at = at;
  e.label = std::move(label);
  return e;
}

Element note(std::string id, std::string label, bool degenerate) {
  Element e;
  e.id = std::move(id);
  e.type = ElementType::Label;
  e.label = std::move(label);
  e.degenerate = degenerate;
  return e;
}

// Planes first in ascending z, everything else after in insertion order.
void order_elements(Scene& s) {
  std::stable_partition(s.elements.begin(), s.elements.end(),
                        [](const Element& e) { return e.type == ElementType::Plane; });
  const auto planes_end =
      std::find_if(s.elements.begin(), s.elements.end(),
                   [](const Element& e) { return e.type != ElementType::Plane; });
  std::stable_sort(s.elements.begin(), planes_end,
                   [](const Element& a, const Element& b) { return *a.z < *b.z; });
}

// Finite plane, or an INFINITY label in its place.
void add_distance(Scene& s, const std::string& id, Distance from_mla, const std::string& label) {
  if (from_mla.is_finite()) {
    s.elements.push_back(plane(id, from_mla.mm(), label));
  } else {
    s.elements.push_back(note(id, label + " at infinity", true));
  }
}

// Object-side ray from H1U out to the plane at MLA-frame position z_end.
Element object_segment(const CameraConfig& config, std::string id, const Ray& ray, double z_end,
                       std::string label) {
  const double h1u = config.h1u_position();
  return segment(std::move(id), {h1u, ray.at(0.0)}, {z_end, ray.at(z_end - h1u)},
                 std::move(label));
}

void add_camera_planes(Scene& s, const CameraConfig& config) {
  s.elements.push_back(plane("sensor", -config.micro_lens_focal(), "Sensor"));
  s.elements.push_back(plane("mla", 0.0, "MLA"));
  s.elements.push_back(plane("H2U", config.h2u_position(), "H2U"));
  s.elements.push_back(plane("H1U", config.h1u_position(), "H1U"));
}

json point_json(Point2 p) { return json::array({p.z, p.y}); }

Point2 point_from(const json& j, const std::string& id) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::InvalidScene, "element " + id + ": coordinates must be [z, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Kind kind_from(std::string_view name) {
  if (name == "refocus-section") return Kind::RefocusSection;
  if (name == "triangulation-3d") return Kind::Triangulation3d;
  throw Error(ErrorCode::InvalidScene, "unknown scene kind '" + std::string(name) + "'");
}

ElementType type_from(std::string_view name) {
  if (name == "plane") return ElementType::Plane;
  if (name == "ray-segment") return ElementType::RaySegment;
  if (name == "point") return ElementType::Point;
  if (name == "label") return ElementType::Label;
  throw Error(ErrorCode::InvalidScene, "unknown element type '" + std::string(name) + "'");
}

}  // namespace

std::string_view kind_name(Kind kind) noexcept {
  return kind == Kind::RefocusSection ? "refocus-section" : "triangulation-3d";
}

std::string_view element_type_name(ElementType type) noexcept {
  switch (type) {
    case ElementType::Plane: return "plane";
    case ElementType::RaySegment: return "ray-segment";
    case ElementType::Point: return "point";
    case ElementType::Label: return "label";
  }
  return "label";
}

const Element* Scene::find(std::string_view id) const {
  for (const Element& e : elements) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

Scene build_refocus_scene(const CameraConfig& config, std::span<const double> shifts) {
  const std::vector<RefocusEntry> series = refocus_series(config, shifts);

  Scene s;
  s.kind = Kind::RefocusSection;
  add_camera_planes(s, config);
  s.elements.push_back(
      plane("FU", config.h1u_position() + config.main_lens_focal(), "FU"));

  std::set<double> seen;
  for (const RefocusEntry& entry : series) {
    if (!seen.insert(entry.a).second) continue;
    const std::string tag = number_tag(entry.a);
    const std::string suffix = " (a=" + tag + ")";
    if (!entry.ok()) {
      s.elements.push_back(note("d_a:" + tag, "d_a" + suffix + ": " + std::string(entry.failure->name()), true));
      continue;
    }
    const RefocusResult& r = *entry.result;
    add_distance(s, "d_a:" + tag, r.distance_from_mla, "d_a" + suffix);
    if (entry.dof) {
      add_distance(s, "d_a-:" + tag, entry.dof->near_from_mla, "d_a-" + suffix);
      add_distance(s, "d_a+:" + tag, entry.dof->far_from_mla, "d_a+" + suffix);
    } else {
      s.elements.push_back(
          note("dof:" + tag, "DOF" + suffix + ": " + std::string(entry.dof_failure->name()), true));
    }
    if (r.distance_from_mla.is_infinite()) continue;

    const RayPair rays = select_refocus_rays(config, entry.a);
    const Ray* image_side[2] = {&rays.first, &rays.second};
    for (int n = 0; n < 2; ++n) {
      const Ray& ray = *image_side[n];
      const std::string id = "ray:" + tag + ":" + std::to_string(n + 1);
      const double z0 = -config.micro_lens_focal();
      const double z1 = config.h2u_position();
      s.elements.push_back(segment(id + ":image", {z0, ray.at(z0)}, {z1, ray.at(z1)}, "ray" + suffix));
      s.elements.push_back(object_segment(config, id + ":object", refract_at_main_lens(config, ray),
                                          r.distance_from_mla.mm(), "ray" + suffix));
    }
  }
  order_elements(s);
  return s;
}

Scene build_triangulation_scene(const CameraConfig& config, int gap,
                                std::span<const double> disparities) {
  const TriangulationResult tri = depth_plane_series(config, gap, disparities);
  const double pupil = tri.entrance_pupil_from_mla;
  const double c = config.center_index();
  const double extent_scale = 20.0 * config.micro_lens_pitch() / config.image_distance();

  Scene s;
  s.kind = Kind::Triangulation3d;
  add_camera_planes(s, config);
  s.elements.push_back(plane("entrance_pupil", pupil, "Entrance pupil"));
  s.elements.push_back(point("viewpoint:0", {pupil, viewpoint(config, 0.0).y}, "viewpoint i=0"));
  s.elements.push_back(point("viewpoint:" + std::to_string(gap),
                             {pupil, viewpoint(config, static_cast<double>(gap)).y},
                             "viewpoint i=" + std::to_string(gap) + " (G=" + std::to_string(gap) +
                                 ")"));

  const std::string gap_tag = std::to_string(gap);
  std::set<double> seen;
  for (const PlaneEntry& entry : tri.planes) {
    if (!seen.insert(entry.disparity).second) continue;
    const std::string tag = number_tag(entry.disparity);
    const std::string id = "Z:" + gap_tag + ":" + tag;
    const std::string label = "Z(G=" + gap_tag + ", dx=" + tag + ")";
    if (!entry.ok()) {
      s.elements.push_back(note(id, label + ": " + std::string(entry.failure->name()), true));
      continue;
    }
    if (entry.plane->from_mla.is_infinite()) {
      s.elements.push_back(note(id, label + " at infinity", true));
      continue;
    }
    Element p = plane(id, entry.plane->from_mla.mm(), label);
    p.half_extent = extent_scale * entry.plane->from_h1u.mm();
    s.elements.push_back(std::move(p));

    const double z_end = entry.plane->from_mla.mm();
    s.elements.push_back(object_segment(config, "ray:" + id + ":ref", object_ray(config, c, 0.0),
                                        z_end, "viewpoint i=0"));
    s.elements.push_back(object_segment(config, "ray:" + id + ":gap",
                                        object_ray(config, c + gap, -entry.disparity), z_end,
                                        "viewpoint i=" + gap_tag));
  }
  order_elements(s);
  return s;
}

std::string serialize_scene(const Scene& scene) {
  json elements = json::array();
  for (const Element& e : scene.elements) {
    json j = {{"id", e.id}, {"type", element_type_name(e.type)}, {"label", e.label}};
    if (e.type == ElementType::Point && e.at) {
      j["z"] = e.at->z;
      j["y"] = e.at->y;
    } else if (e.z) {
      j["z"] = *e.z;
    }
    if (e.from) j["from"] = point_json(*e.from);
    if (e.to) j["to"] = point_json(*e.to);
    if (e.half_extent) j["half_extent"] = *e.half_extent;
    if (e.degenerate) j["flag"] = "degenerate";
    elements.push_back(std::move(j));
  }
  const json doc = {{"version", scene.version},
                    {"units", scene.units},
                    {"kind", kind_name(scene.kind)},
                    {"elements", std::move(elements)}};
  return doc.dump(2) + "\n";
}

Scene parse_scene(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidJson, std::string("scene is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::InvalidScene, "scene must be a JSON object");
  if (!doc.contains("version") || doc["version"] != json(kSchemaVersion)) {
    throw Error(ErrorCode::UnsupportedVersion,
                "unsupported scene version " + (doc.contains("version") ? doc["version"].dump() : "(missing)"));
  }
  for (const auto& [key, _] : doc.items()) {
    if (key != "version" && key != "units" && key != "kind" && key != "elements") {
      throw Error(ErrorCode::InvalidScene, "unknown scene field '" + key + "'");
    }
  }
  if (doc.value("units", "") != "mm") throw Error(ErrorCode::InvalidScene, "units must be mm");
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw Error(ErrorCode::InvalidScene, "scene kind missing");
  }
  if (!doc.contains("elements") || !doc["elements"].is_array()) {
    throw Error(ErrorCode::InvalidScene, "scene elements must be an array");
  }

  Scene s;
  s.kind = kind_from(doc["kind"].get<std::string>());
  std::set<std::string> ids;
  for (const json& j : doc["elements"]) {
    if (!j.is_object() || !j.contains("id") || !j["id"].is_string() || !j.contains("type") ||
        !j["type"].is_string() || !j.contains("label") || !j["label"].is_string()) {
      throw Error(ErrorCode::InvalidScene, "element needs string id, type and label");
    }
    Element e;
    e.id = j["id"].get<std::string>();
    e.type = type_from(j["type"].get<std::string>());
    e.label = j["label"].get<std::string>();
    if (!ids.insert(e.id).second) throw Error(ErrorCode::InvalidScene, "duplicate id " + e.id);
    for (const auto& [key, value] : j.items()) {
      if (key == "id" || key == "type" || key == "label") continue;
      if (key == "z" || key == "y" || key == "half_extent") {
        if (!value.is_number()) throw Error(ErrorCode::InvalidScene, e.id + ": " + key + " must be a number");
      } else if (key == "from") {
        e.from = point_from(value, e.id);
      } else if (key == "to") {
        e.to = point_from(value, e.id);
      } else if (key == "flag") {
        if (value != "degenerate") throw Error(ErrorCode::InvalidScene, e.id + ": unknown flag");
        e.degenerate = true;
      } else {
        throw Error(ErrorCode::InvalidScene, e.id + ": unknown field '" + key + "'");
      }
    }
    if (j.contains("half_extent")) e.half_extent = j["half_extent"].get<double>();
    switch (e.type) {
      case ElementType::Plane:
        if (!j.contains("z")) throw Error(ErrorCode::InvalidScene, e.id + ": plane needs z");
        e.z = j["z"].get<double>();
        break;
      case ElementType::Point:
        if (!j.contains("z") || !j.contains("y")) {
          throw Error(ErrorCode::InvalidScene, e.id + ": point needs z and y");
        }
        e.at = Point2{j["z"].get<double>(), j["y"].get<double>()};
        break;
      case ElementType::RaySegment:
        if (!e.from || !e.to || *e.from == *e.to) {
          throw Error(ErrorCode::InvalidScene, e.id + ": ray segment needs distinct from/to");
        }
        break;
      case ElementType::Label:
        if (j.contains("z")) e.z = j["z"].get<double>();
        break;
    }
    s.elements.push_back(std::move(e));
  }
  return s;
}

}  // namespace plenoptic::scene
