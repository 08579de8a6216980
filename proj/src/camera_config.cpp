#include "plenoptic/camera_config.hpp"

#include <cmath>
#include <string>

#include "plenoptic/error.hpp"
#include "plenoptic/geometry.hpp"

namespace plenoptic {

namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::NonFiniteValue, std::string(name) + " must be finite");
  }
  if (value <= 0.0) {
    throw Error(ErrorCode::NonPositiveLength,
                std::string(name) + " must be > 0 mm, got " + std::to_string(value));
  }
}

}  // namespace

RawConfig default_raw_config() {
  RawConfig raw;
  raw.pixel_pitch = 0.0014;
  raw.micro_lens_pitch = 0.0125;
  raw.micro_lens_focal = 0.025;
  raw.micro_image_resolution = 9;
  raw.main_lens_focal = 16.0;
  raw.hiatus = 0.0;
  raw.exit_pupil_distance = 100.0;
  raw.focus_distance = 1000.0;
  return raw;
}

RawConfig scaled(const RawConfig& raw, double k) {
  RawConfig out = raw;
  out.pixel_pitch *= k;
  out.micro_lens_pitch *= k;
  out.micro_lens_focal *= k;
  out.main_lens_focal *= k;
  out.hiatus *= k;
  out.exit_pupil_distance *= k;
  if (out.focus_distance) *out.focus_distance *= k;
  if (out.image_distance) *out.image_distance *= k;
  return out;
}

CameraConfig validate_config(const RawConfig& raw) {
  require_positive(raw.pixel_pitch, "pixel_pitch");
  require_positive(raw.micro_lens_pitch, "micro_lens_pitch");
  require_positive(raw.micro_lens_focal, "micro_lens_focal");
  require_positive(raw.main_lens_focal, "main_lens_focal");
  require_positive(raw.exit_pupil_distance, "exit_pupil_distance");
  if (!std::isfinite(raw.hiatus)) {
    throw Error(ErrorCode::NonFiniteValue, "hiatus must be finite");
  }
  if (raw.micro_image_resolution < 2) {
    throw Error(ErrorCode::MTooSmall, "micro_image_resolution must be >= 2, got " +
                                          std::to_string(raw.micro_image_resolution));
  }
  if (raw.focus_distance.has_value() == raw.image_distance.has_value()) {
    throw Error(ErrorCode::BothOrNeitherFocusGiven,
                "exactly one of focus_distance and image_distance must be given");
  }

  const double f = raw.main_lens_focal;
  double b_u = 0.0;
  if (raw.focus_distance) {
    require_positive(*raw.focus_distance, "focus_distance");
    b_u = image_distance(f, *raw.focus_distance);
  } else {
    require_positive(*raw.image_distance, "image_distance");
    b_u = *raw.image_distance;
    if (b_u <= f) {
      throw Error(ErrorCode::FocusNotBeyondFocal,
                  "image_distance must exceed main_lens_focal for a real focus plane");
    }
  }
  if (!(b_u > f)) {
    throw Error(ErrorCode::FocusNotBeyondFocal, "image distance does not exceed the focal length");
  }

  const Distance d_f = raw.focus_distance ? Distance::finite(*raw.focus_distance)
                                          : object_distance(f, b_u);
  return CameraConfig(raw, b_u, d_f);
}

}  // namespace plenoptic
