#include "plenoptic/sle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "plenoptic/error.hpp"

namespace plenoptic::sle {

namespace {

double row_norm_sq(const Row& r) { return r[0] * r[0] + r[1] * r[1]; }

double max_row_norm_sq(std::span<const Row> a) {
  double m = 0.0;
  for (const Row& r : a) m = std::max(m, row_norm_sq(r));
  return m;
}

void check_system(const LinearSystem& s) {
  if (s.a.size() < 2) {
    throw Error(ErrorCode::InvalidSystem, "system needs at least two equations");
  }
  if (s.a.size() != s.b.size()) {
    throw Error(ErrorCode::InvalidSystem, "A and b row counts differ");
  }
  for (std::size_t i = 0; i < s.a.size(); ++i) {
    if (!std::isfinite(s.a[i][0]) || !std::isfinite(s.a[i][1]) || !std::isfinite(s.b[i])) {
      throw Error(ErrorCode::InvalidSystem, "system entries must be finite");
    }
  }
}

// Cramer's rule on a 2x2 matrix; the threshold is relative to its rows.
Vec2 cramer(const Row& r0, const Row& r1, double b0, double b1, double norm_sq) {
  const double det = r0[0] * r1[1] - r0[1] * r1[0];
  if (!(std::abs(det) >= kSingularRatio * norm_sq)) {
    throw Error(ErrorCode::SingularSystem, "singular system (det " + std::to_string(det) + ")");
  }
  return {(r1[1] * b0 - r0[1] * b1) / det, (r0[0] * b1 - r1[0] * b0) / det};
}

double residual(const LinearSystem& s, const Vec2& x) {
  double r = 0.0;
  for (std::size_t i = 0; i < s.a.size(); ++i) {
    r = std::max(r, std::abs(s.a[i][0] * x[0] + s.a[i][1] * x[1] - s.b[i]));
  }
  return r;
}

}  // namespace

std::array<std::vector<double>, 2> pseudo_inverse(std::span<const Row> a) {
  if (a.size() < 2) {
    throw Error(ErrorCode::InvalidSystem, "system needs at least two equations");
  }
  // Normal matrix N = A^T A (symmetric).
  double n00 = 0.0, n01 = 0.0, n11 = 0.0;
  for (const Row& r : a) {
    n00 += r[0] * r[0];
    n01 += r[0] * r[1];
    n11 += r[1] * r[1];
  }
  const double det = n00 * n11 - n01 * n01;
  const double norm_sq = std::max(n00 * n00 + n01 * n01, n01 * n01 + n11 * n11);
  if (!(std::abs(det) >= kSingularRatio * norm_sq)) {
    throw Error(ErrorCode::SingularSystem,
                "normal matrix is singular (det " + std::to_string(det) + ")");
  }
  const double i00 = n11 / det, i01 = -n01 / det, i11 = n00 / det;

  std::array<std::vector<double>, 2> pinv{std::vector<double>(a.size()),
                                          std::vector<double>(a.size())};
  for (std::size_t k = 0; k < a.size(); ++k) {
    pinv[0][k] = i00 * a[k][0] + i01 * a[k][1];
    pinv[1][k] = i01 * a[k][0] + i11 * a[k][1];
  }
  return pinv;
}

Solution solve_direct(const LinearSystem& system) {
  check_system(system);
  if (system.a.size() != 2) {
    throw Error(ErrorCode::InvalidSystem, "direct inverse requires a 2x2 system");
  }
  Solution s;
  s.x = cramer(system.a[0], system.a[1], system.b[0], system.b[1], max_row_norm_sq(system.a));
  s.residual = residual(system, s.x);
  return s;
}

Solution solve_pseudo(const LinearSystem& system) {
  check_system(system);
  const auto pinv = pseudo_inverse(system.a);
  Solution s;
  for (std::size_t k = 0; k < system.b.size(); ++k) {
    s.x[0] += pinv[0][k] * system.b[k];
    s.x[1] += pinv[1][k] * system.b[k];
  }
  s.residual = residual(system, s.x);
  return s;
}

Solution solve(const LinearSystem& system) {
  return system.a.size() == 2 ? solve_direct(system) : solve_pseudo(system);
}

IntersectionPoint intersect_rays(const Ray& r1, const Ray& r2) {
  if (r1.side != r2.side) {
    throw Error(ErrorCode::MixedSides, "cannot intersect an image-side ray with an object-side ray");
  }
  const Row row1{-r1.slope, 1.0};
  const Row row2{-r2.slope, 1.0};
  const double norm_sq = std::max(row_norm_sq(row1), row_norm_sq(row2));
  Vec2 x;
  try {
    x = cramer(row1, row2, r1.intercept, r2.intercept, norm_sq);
  } catch (const Error&) {
    throw Error(ErrorCode::ParallelRays, "rays are parallel (slope " + std::to_string(r1.slope) + ")");
  }
  return {x[0], r1.at(x[0])};
}

}  // namespace plenoptic::sle
