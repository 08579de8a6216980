#pragma once

#include <optional>
#include <span>
#include <vector>

#include "plenoptic/camera_config.hpp"
#include "plenoptic/distance.hpp"
#include "plenoptic/error.hpp"
#include "plenoptic/sle.hpp"

namespace plenoptic {

/// Virtual camera formed by relative pixel index i, located on the entrance
/// pupil. z_pupil is measured from H1U.
struct Viewpoint {
  double index = 0.0;
  double z_pupil = 0.0;
  double y = 0.0;
};

/// Intersects object rays of viewpoint i from micro lenses j and j + 1.
Viewpoint viewpoint(const CameraConfig& config, double i, double j = 0.0);

/// Intersection of the index-shifted pair object_ray(c+i, j) and
/// object_ray(c+i+G, j+1). Kept for comparison with the same-index pairing.
sle::IntersectionPoint mixed_index_intersection(const CameraConfig& config, double i, int gap,
                                                double j = 0.0);

struct DepthPlane {
  double disparity = 0.0;
  Distance from_h1u = Distance::infinity();
  Distance from_mla = Distance::infinity();
};

struct PlaneEntry {
  double disparity = 0.0;
  std::optional<DepthPlane> plane;
  std::optional<Failure> failure;

  bool ok() const noexcept { return plane.has_value(); }
};

struct TriangulationResult {
  int gap = 0;
  double baseline = 0.0;                 // B_G, transverse separation in mm
  double entrance_pupil_from_h1u = 0.0;
  double entrance_pupil_from_mla = 0.0;
  std::vector<PlaneEntry> planes;
};

/// B_G = y(viewpoint(0)) - y(viewpoint(G)) and the entrance pupil position.
TriangulationResult baseline(const CameraConfig& config, int gap);

/// Depth plane Z_(G, dx) for disparity dx in micro-lens units. Parallel rays
/// give INFINITY. Throws InvalidGap (G == 0) or VirtualPlane (Z <= 0 from H1U).
DepthPlane triangulate(const CameraConfig& config, int gap, double disparity);

/// baseline(G) plus one in-band plane entry per disparity. Throws EmptySeries
/// or InvalidGap.
TriangulationResult depth_plane_series(const CameraConfig& config, int gap,
                                       std::span<const double> disparities);

}  // namespace plenoptic
