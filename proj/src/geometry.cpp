#include "plenoptic/geometry.hpp"

#include <cmath>
#include <string>

#include "plenoptic/error.hpp"

namespace plenoptic {

double image_distance(double focal, double object_dist) {
  if (!(focal > 0.0)) {
    throw Error(ErrorCode::NonPositiveLength, "focal length must be > 0");
  }
  if (!(object_dist > focal)) {
    throw Error(ErrorCode::FocusNotBeyondFocal,
                "focus distance " + std::to_string(object_dist) +
                    " mm does not exceed the focal length " + std::to_string(focal) + " mm");
  }
  return focal * object_dist / (object_dist - focal);
}

Distance object_distance(double focal, double image_dist) {
  if (!(focal > 0.0) || !(image_dist > 0.0)) {
    throw Error(ErrorCode::NonPositiveLength, "focal length and image distance must be > 0");
  }
  if (std::abs(image_dist - focal) <= kFocalTolerance * focal) {
    return Distance::infinity();
  }
  if (image_dist < focal) {
    throw Error(ErrorCode::VirtualObject, "image distance " + std::to_string(image_dist) +
                                              " mm lies inside the focal length; conjugate is virtual");
  }
  return Distance::finite(focal * image_dist / (image_dist - focal));
}

double micro_image_center(const CameraConfig& config, double j) {
  const double s_j = j * config.micro_lens_pitch();
  return s_j * (1.0 + config.micro_lens_focal() / config.exit_pupil_distance());
}

Ray image_ray(const CameraConfig& config, double k, double j) {
  const double s_j = j * config.micro_lens_pitch();
  // s_j - u expanded by hand: s_j - u_c is tiny next to s_j when d_A' >> f_s,
  // and subtracting the two would cancel most of the significant digits.
  const double offset = s_j * config.micro_lens_focal() / config.exit_pupil_distance() +
                        (k - config.center_index()) * config.pixel_pitch();
  return Ray{-offset / config.micro_lens_focal(), s_j, RaySide::Image};
}

Ray refract_at_main_lens(const CameraConfig& config, const Ray& image_side) {
  const double height = image_side.at(config.image_distance());
  return Ray{image_side.slope - height / config.main_lens_focal(), height, RaySide::Object};
}

Ray object_ray(const CameraConfig& config, double k, double j) {
  return refract_at_main_lens(config, image_ray(config, k, j));
}

}  // namespace plenoptic
