#include "plenoptic/triangulate.hpp"

#include <cstdint>
#include <string>

#include "plenoptic/geometry.hpp"
#include "plenoptic/kernels/pair_intersect.hpp"

namespace plenoptic {

namespace {

void require_gap(int gap) {
  if (gap == 0) {
    throw Error(ErrorCode::InvalidGap, "viewpoint gap G must be nonzero for triangulation");
  }
}

// Reference viewpoint i0 = 0 (central).
constexpr double kReferenceView = 0.0;

RayPair triangulation_rays(const CameraConfig& config, int gap, double disparity) {
  const double c = config.center_index();
  return {object_ray(config, c + kReferenceView, 0.0),
          object_ray(config, c + kReferenceView + gap, -disparity)};
}

DepthPlane plane_from_intersection(const CameraConfig& config, double disparity, double z) {
  if (!(z > 0.0)) {
    throw Error(ErrorCode::VirtualPlane, "disparity " + std::to_string(disparity) +
                                             " triangulates behind the main lens (z = " +
                                             std::to_string(z) + " mm)");
  }
  const Distance from_h1u = Distance::finite(z);
  return {disparity, from_h1u, from_h1u.offset(config.h1u_position())};
}

DepthPlane infinite_plane(double disparity) {
  return {disparity, Distance::infinity(), Distance::infinity()};
}

}  // namespace

Viewpoint viewpoint(const CameraConfig& config, double i, double j) {
  const double k = config.center_index() + i;
  const sle::IntersectionPoint p =
      sle::intersect_rays(object_ray(config, k, j), object_ray(config, k, j + 1.0));
  return {i, p.z, p.y};
}

sle::IntersectionPoint mixed_index_intersection(const CameraConfig& config, double i, int gap,
                                                double j) {
  const double k = config.center_index() + i;
  return sle::intersect_rays(object_ray(config, k, j), object_ray(config, k + gap, j + 1.0));
}

TriangulationResult baseline(const CameraConfig& config, int gap) {
  const Viewpoint ref = viewpoint(config, kReferenceView);
  TriangulationResult r;
  r.gap = gap;
  r.baseline = gap == 0 ? 0.0 : ref.y - viewpoint(config, kReferenceView + gap).y;
  r.entrance_pupil_from_h1u = ref.z_pupil;
  r.entrance_pupil_from_mla = ref.z_pupil + config.h1u_position();
  return r;
}

DepthPlane triangulate(const CameraConfig& config, int gap, double disparity) {
  require_gap(gap);
  const RayPair rays = triangulation_rays(config, gap, disparity);
  try {
    return plane_from_intersection(config, disparity,
                                   sle::intersect_rays(rays.first, rays.second).z);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParallelRays) throw;
    return infinite_plane(disparity);
  }
}

TriangulationResult depth_plane_series(const CameraConfig& config, int gap,
                                       std::span<const double> disparities) {
  require_gap(gap);
  if (disparities.empty()) {
    throw Error(ErrorCode::EmptySeries, "at least one disparity is required");
  }
  TriangulationResult result = baseline(config, gap);

  const std::size_t n = disparities.size();
  std::vector<double> s1(n), c1(n), s2(n), c2(n), z(n), y(n);
  std::vector<std::uint8_t> status(n);
  for (std::size_t i = 0; i < n; ++i) {
    const RayPair rays = triangulation_rays(config, gap, disparities[i]);
    s1[i] = rays.first.slope;
    c1[i] = rays.first.intercept;
    s2[i] = rays.second.slope;
    c2[i] = rays.second.intercept;
  }
  kernels::intersect_pairs({s1, c1, s2, c2}, {z, y, status});

  result.planes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    PlaneEntry entry;
    entry.disparity = disparities[i];
    if (status[i] != kernels::kPairOk) {
      entry.plane = infinite_plane(disparities[i]);
    } else {
      try {
        entry.plane = plane_from_intersection(config, disparities[i], z[i]);
      } catch (const Error& e) {
        entry.failure = Failure::from(e);
      }
    }
    result.planes.push_back(std::move(entry));
  }
  return result;
}

}  // namespace plenoptic
