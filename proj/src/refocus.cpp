#include "plenoptic/refocus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "plenoptic/kernels/pair_intersect.hpp"
#include "plenoptic/sle.hpp"

namespace plenoptic {

namespace {

double border_offset(Border border) {
  switch (border) {
    case Border::None: return 0.0;
    case Border::Inner: return 0.5;
    case Border::Outer: return -0.5;
  }
  return 0.0;
}

// Image distance b_a = b_U + d_a' where d_a' = -z*.
double effective_image_distance(const CameraConfig& config, double z) {
  return config.image_distance() - z;
}

Distance conjugate_or_virtual(const CameraConfig& config, double b, double a) {
  if (!(b > 0.0)) {
    throw Error(ErrorCode::VirtualRefocusPlane,
                "shift " + std::to_string(a) + " gives a non-positive image distance");
  }
  try {
    return object_distance(config.main_lens_focal(), b);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::VirtualObject) throw;
    throw Error(ErrorCode::VirtualRefocusPlane,
                "shift " + std::to_string(a) + " places the refocus plane beyond infinity (b_a = " +
                    std::to_string(b) + " mm < f_U)");
  }
}

RefocusResult result_from_intersection(const CameraConfig& config, double a, double z, double y) {
  RefocusResult r;
  r.a = a;
  r.elongation = -z;
  r.intersection_y = y;
  r.effective_image_distance = effective_image_distance(config, z);
  r.object_distance_from_h1u = conjugate_or_virtual(config, r.effective_image_distance, a);
  r.distance_from_mla = r.object_distance_from_h1u.offset(config.h1u_position());
  return r;
}

// The border pair with the longer image distance bounds the near side. Which
// border that is depends on the sign of a.
DepthOfField dof_from_intersections(const CameraConfig& config, double a, double z_inner,
                                    double z_outer) {
  const double b_inner = effective_image_distance(config, z_inner);
  const double b_outer = effective_image_distance(config, z_outer);
  const double b_near = std::max(b_inner, b_outer);
  const double b_far = std::min(b_inner, b_outer);

  DepthOfField dof{Distance::infinity(), Distance::infinity(), Distance::infinity(),
                   Distance::infinity()};
  dof.near_from_h1u = conjugate_or_virtual(config, b_near, a);
  try {
    dof.far_from_h1u = conjugate_or_virtual(config, b_far, a);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::VirtualRefocusPlane) throw;
    dof.far_from_h1u = Distance::infinity();
  }
  dof.near_from_mla = dof.near_from_h1u.offset(config.h1u_position());
  dof.far_from_mla = dof.far_from_h1u.offset(config.h1u_position());
  return dof;
}

void require_dof_shift(double a, const RefocusOptions& options) {
  if (std::abs(a) < options.a_min) {
    throw Error(ErrorCode::DegenerateDOF, "depth of field collapses for |a| < " +
                                              std::to_string(options.a_min));
  }
}

}  // namespace

RayPair select_refocus_rays(const CameraConfig& config, double a, Border border) {
  const double offset = border_offset(border);
  const double j = a * (config.micro_image_resolution() - 1) / 2.0;
  const double k_last = config.micro_image_resolution() - 1.0;
  return {image_ray(config, 0.0 + offset, j), image_ray(config, k_last - offset, -j)};
}

RefocusResult refocus(const CameraConfig& config, double a) {
  const RayPair rays = select_refocus_rays(config, a);
  const sle::IntersectionPoint p = sle::intersect_rays(rays.first, rays.second);
  return result_from_intersection(config, a, p.z, p.y);
}

DepthOfField refocus_dof(const CameraConfig& config, double a, const RefocusOptions& options) {
  require_dof_shift(a, options);
  const RayPair inner = select_refocus_rays(config, a, Border::Inner);
  const RayPair outer = select_refocus_rays(config, a, Border::Outer);
  const double z_inner = sle::intersect_rays(inner.first, inner.second).z;
  const double z_outer = sle::intersect_rays(outer.first, outer.second).z;
  return dof_from_intersections(config, a, z_inner, z_outer);
}

std::vector<RefocusEntry> refocus_series(const CameraConfig& config,
                                         std::span<const double> shifts,
                                         const RefocusOptions& options) {
  if (shifts.empty()) {
    throw Error(ErrorCode::EmptySeries, "at least one shift parameter is required");
  }
  // Lanes: [center..., inner..., outer...].
  const std::size_t n = shifts.size();
  std::vector<double> s1(3 * n), c1(3 * n), s2(3 * n), c2(3 * n), z(3 * n), y(3 * n);
  std::vector<std::uint8_t> status(3 * n);
  const Border borders[3] = {Border::None, Border::Inner, Border::Outer};
  for (std::size_t b = 0; b < 3; ++b) {
    for (std::size_t i = 0; i < n; ++i) {
      const RayPair rays = select_refocus_rays(config, shifts[i], borders[b]);
      const std::size_t lane = b * n + i;
      s1[lane] = rays.first.slope;
      c1[lane] = rays.first.intercept;
      s2[lane] = rays.second.slope;
      c2[lane] = rays.second.intercept;
    }
  }
  kernels::intersect_pairs({s1, c1, s2, c2}, {z, y, status});

  std::vector<RefocusEntry> entries(n);
  for (std::size_t i = 0; i < n; ++i) {
    RefocusEntry& entry = entries[i];
    entry.a = shifts[i];
    try {
      if (status[i] != kernels::kPairOk) {
        throw Error(ErrorCode::ParallelRays, "refocus rays are parallel for this shift");
      }
      entry.result = result_from_intersection(config, shifts[i], z[i], y[i]);
    } catch (const Error& e) {
      entry.failure = Failure::from(e);
      continue;
    }
    try {
      require_dof_shift(shifts[i], options);
      if (status[n + i] != kernels::kPairOk || status[2 * n + i] != kernels::kPairOk) {
        throw Error(ErrorCode::ParallelRays, "border rays are parallel for this shift");
      }
      entry.dof = dof_from_intersections(config, shifts[i], z[n + i], z[2 * n + i]);
    } catch (const Error& e) {
      entry.dof_failure = Failure::from(e);
    }
  }
  return entries;
}

}  // namespace plenoptic
