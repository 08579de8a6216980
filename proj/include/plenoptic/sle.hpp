#pragma once

#include <array>
#include <span>
#include <vector>

#include "plenoptic/geometry.hpp"

namespace plenoptic::sle {

using Row = std::array<double, 2>;
using Vec2 = std::array<double, 2>;

/// n x 2 system A x = b with n >= 2.
struct LinearSystem {
  std::vector<Row> a;
  std::vector<double> b;
};

struct Solution {
  Vec2 x{};
  double residual = 0.0;  // max-norm of A x - b
};

// Scale-aware singularity threshold: |det| < kSingularRatio * max_row_norm^2.
inline constexpr double kSingularRatio = 1e-12;

/// Moore-Penrose pseudo-inverse (A^T A)^-1 A^T via the normal equations,
/// returned as two rows of length n. Throws SingularSystem.
std::array<std::vector<double>, 2> pseudo_inverse(std::span<const Row> a);

/// Exact inverse of a 2x2 system (Cramer's rule). Throws SingularSystem.
Solution solve_direct(const LinearSystem& system);

/// Normal-equation solution, valid for any n >= 2.
Solution solve_pseudo(const LinearSystem& system);

/// Direct inverse for n == 2, pseudo-inverse for n > 2.
/// Throws InvalidSystem (n < 2, size mismatch, non-finite) or SingularSystem.
Solution solve(const LinearSystem& system);

struct IntersectionPoint {
  double z = 0.0;
  double y = 0.0;
};

/// Intersection of two same-side rays, in the rays' reference frame.
/// Throws MixedSides or ParallelRays.
IntersectionPoint intersect_rays(const Ray& r1, const Ray& r2);

}  // namespace plenoptic::sle
