#include <algorithm>
#include <cmath>
#include <limits>

#include "plenoptic/kernels/pair_intersect.hpp"
#include "plenoptic/sle.hpp"

namespace plenoptic::kernels::detail {

void intersect_pairs_scalar(const PairInput& in, const PairOutput& out, std::size_t begin) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  const std::size_t n = in.slope1.size();
  for (std::size_t i = begin; i < n; ++i) {
    const double a0 = -in.slope1[i];
    const double a1 = -in.slope2[i];
    const double det = a0 - a1;
    const double norm_sq = std::max(a0 * a0 + 1.0, a1 * a1 + 1.0);
    if (!(std::abs(det) >= sle::kSingularRatio * norm_sq)) {
      out.z[i] = nan;
      out.y[i] = nan;
      out.status[i] = kPairParallel;
      continue;
    }
    const double z = (in.intercept1[i] - in.intercept2[i]) / det;
    out.z[i] = z;
    out.y[i] = in.slope1[i] * z + in.intercept1[i];
    out.status[i] = kPairOk;
  }
}

}  // namespace plenoptic::kernels::detail
