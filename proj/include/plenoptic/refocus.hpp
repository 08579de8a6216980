#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "plenoptic/camera_config.hpp"
#include "plenoptic/distance.hpp"
#include "plenoptic/error.hpp"
#include "plenoptic/geometry.hpp"

namespace plenoptic {

/// Half-pixel offset applied to the selected pixels: Inner moves both pixels
/// toward their micro image centers, Outer away from them.
enum class Border { None, Inner, Outer };

/// The mirrored image-side pair for shift a: pixel k = 0 under micro lens
/// +a(M-1)/2 and pixel k = M-1 under micro lens -a(M-1)/2.
RayPair select_refocus_rays(const CameraConfig& config, double a, Border border = Border::None);

struct DepthOfField {
  Distance near_from_h1u;
  Distance far_from_h1u;
  Distance near_from_mla;
  Distance far_from_mla;
};

struct RefocusResult {
  double a = 0.0;
  double elongation = 0.0;        // d_a', positive when the image distance grows
  double intersection_y = 0.0;
  double effective_image_distance = 0.0;  // b_a = b_U + d_a', from H2U
  Distance object_distance_from_h1u = Distance::infinity();
  Distance distance_from_mla = Distance::infinity();  // d_a
};

struct RefocusOptions {
  double a_min = 0.05;  // DOF is degenerate for |a| below this
};

/// Throws VirtualRefocusPlane or ParallelRays.
RefocusResult refocus(const CameraConfig& config, double a);

/// Near/far DOF limits from the half-pixel border ray pairs.
/// Throws DegenerateDOF when |a| < a_min, VirtualRefocusPlane for a virtual
/// near limit. A far limit beyond infinity is reported as INFINITY.
DepthOfField refocus_dof(const CameraConfig& config, double a, const RefocusOptions& options = {});

struct RefocusEntry {
  double a = 0.0;
  std::optional<RefocusResult> result;
  std::optional<DepthOfField> dof;
  std::optional<Failure> failure;      // set instead of result
  std::optional<Failure> dof_failure;  // set when result exists but DOF does not

  bool ok() const noexcept { return result.has_value(); }
};

/// refocus + refocus_dof for each shift, evaluated with the batched
/// intersection kernel. Throws EmptySeries; per-element errors are in-band.
std::vector<RefocusEntry> refocus_series(const CameraConfig& config,
                                         std::span<const double> shifts,
                                         const RefocusOptions& options = {});

}  // namespace plenoptic
