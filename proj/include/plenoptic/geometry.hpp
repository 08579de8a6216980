#pragma once

#include "plenoptic/camera_config.hpp"
#include "plenoptic/distance.hpp"

namespace plenoptic {

enum class RaySide { Image, Object };

/// Linear ray y(z) = slope * z + intercept.
///
/// Image-side rays are referenced to the MLA plane (intercept s_j); object-side
/// rays to H1U (intercept U), with z measured from that plane.
struct Ray {
  double slope = 0.0;
  double intercept = 0.0;
  RaySide side = RaySide::Image;

  double at(double z) const noexcept { return slope * z + intercept; }
};

struct RayPair {
  Ray first;
  Ray second;
};

// Relative tolerance under which b is treated as the focal point.
inline constexpr double kFocalTolerance = 1e-9;

/// Thin-lens image distance b = f * d / (d - f). Throws FocusNotBeyondFocal.
double image_distance(double focal, double object_dist);

/// Thin-lens object distance for image distance b; INFINITY at the focal point.
/// Throws VirtualObject when b < focal.
Distance object_distance(double focal, double image_dist);

/// Sensor position of the central chief ray of micro lens j (continuous j).
double micro_image_center(const CameraConfig& config, double j);

/// Chief ray from pixel k of micro lens j through the micro lens center.
Ray image_ray(const CameraConfig& config, double k, double j);

/// Refracts an image-side ray at the main lens: the height at H2U carries
/// over to H1U and the slope drops by height / f_U.
Ray refract_at_main_lens(const CameraConfig& config, const Ray& image_side);

/// image_ray refracted by the main lens, referenced to H1U.
Ray object_ray(const CameraConfig& config, double k, double j);

}  // namespace plenoptic
