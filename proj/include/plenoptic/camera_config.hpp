#pragma once

#include <optional>

#include "plenoptic/distance.hpp"

namespace plenoptic {

/// Unvalidated camera parameters as supplied by a user. All lengths in mm.
struct RawConfig {
  double pixel_pitch = 0.0;
  double micro_lens_pitch = 0.0;
  double micro_lens_focal = 0.0;
  int micro_image_resolution = 0;
  double main_lens_focal = 0.0;
  double hiatus = 0.0;
  double exit_pupil_distance = 0.0;
  std::optional<double> focus_distance;  // from H1U
  std::optional<double> image_distance;  // from H2U to the MLA plane

  friend bool operator==(const RawConfig&, const RawConfig&) = default;
};

/// Miniature-camera fixture shared by tests, the CLI and the service.
RawConfig default_raw_config();

/// Multiplies every length by k (k > 0). Resolution M is unchanged.
RawConfig scaled(const RawConfig& raw, double k);

/// Validated, immutable plenoptic camera description.
///
/// Frame: MLA plane at z = 0, sensor at z = -f_s, H2U at z = b_U and H1U at
/// z = b_U + d_H, with z increasing toward the object.
class CameraConfig {
 public:
  double pixel_pitch() const noexcept { return raw_.pixel_pitch; }
  double micro_lens_pitch() const noexcept { return raw_.micro_lens_pitch; }
  double micro_lens_focal() const noexcept { return raw_.micro_lens_focal; }
  int micro_image_resolution() const noexcept { return raw_.micro_image_resolution; }
  double main_lens_focal() const noexcept { return raw_.main_lens_focal; }
  double hiatus() const noexcept { return raw_.hiatus; }
  double exit_pupil_distance() const noexcept { return raw_.exit_pupil_distance; }

  /// Main lens image distance b_U (H2U to MLA).
  double image_distance() const noexcept { return image_distance_; }
  /// Focus distance d_f from H1U; INFINITY when b_U sits on the focal point.
  Distance focus_distance() const noexcept { return focus_distance_; }

  /// Micro image center index c = (M - 1) / 2.
  double center_index() const noexcept {
    return (raw_.micro_image_resolution - 1) / 2.0;
  }

  double h2u_position() const noexcept { return image_distance_; }
  double h1u_position() const noexcept { return image_distance_ + raw_.hiatus; }

  /// The parameters exactly as given (one focus form set).
  const RawConfig& raw() const noexcept { return raw_; }

 private:
  friend CameraConfig validate_config(const RawConfig& raw);
  CameraConfig(RawConfig raw, double b_u, Distance d_f)
      : raw_(raw), image_distance_(b_u), focus_distance_(d_f) {}

  RawConfig raw_;
  double image_distance_;
  Distance focus_distance_;
};

/// Throws Error with NonPositiveLength, NonFiniteValue, MTooSmall,
/// FocusNotBeyondFocal or BothOrNeitherFocusGiven.
CameraConfig validate_config(const RawConfig& raw);

}  // namespace plenoptic
