#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plenoptic/camera_config.hpp"

namespace plenoptic::scene {

inline constexpr std::string_view kSchemaVersion = "1";

enum class Kind { RefocusSection, Triangulation3d };
enum class ElementType { Plane, RaySegment, Point, Label };

std::string_view kind_name(Kind kind) noexcept;
std::string_view element_type_name(ElementType type) noexcept;

struct Point2 {
  double z = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// One drawable item. Coordinates are in the MLA frame, mm.
struct Element {
  std::string id;
  ElementType type = ElementType::Label;
  std::string label;
  std::optional<double> z;            // plane position, label anchor
  std::optional<Point2> from, to;     // ray segments
  std::optional<Point2> at;           // points
  std::optional<double> half_extent;  // 3-D plane half size
  bool degenerate = false;

  friend bool operator==(const Element&, const Element&) = default;
};

struct Scene {
  std::string version{kSchemaVersion};
  std::string units{"mm"};
  Kind kind = Kind::RefocusSection;
  std::vector<Element> elements;

  const Element* find(std::string_view id) const;
  friend bool operator==(const Scene&, const Scene&) = default;
};

/// Cross-section with sensor, MLA, principal planes, F_U and per-shift d_a,
/// d_a-, d_a+ planes plus the two center rays. Throws EmptySeries.
Scene build_refocus_scene(const CameraConfig& config, std::span<const double> shifts);

/// Entrance pupil, both viewpoints, Z_(G, dx) planes and triangulating rays.
/// Throws EmptySeries or InvalidGap.
Scene build_triangulation_scene(const CameraConfig& config, int gap,
                                std::span<const double> disparities);

/// Canonical JSON text (sorted keys, two-space indent, trailing newline).
std::string serialize_scene(const Scene& scene);

/// Inverse of serialize_scene. Throws UnsupportedVersion, InvalidScene or InvalidJson.
Scene parse_scene(std::string_view text);

/// SVG 1.1 cross-section. Throws UnsupportedKind for triangulation scenes.
std::string render_svg(const Scene& scene);

}  // namespace plenoptic::scene
