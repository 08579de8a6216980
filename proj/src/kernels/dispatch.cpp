#include <cstdlib>
#include <string>

#include "plenoptic/error.hpp"
#include "plenoptic/kernels/pair_intersect.hpp"

namespace plenoptic::kernels {

std::string_view backend_name(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar: return true;
    case Backend::Avx2:
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Backend default_backend() noexcept {
  static const Backend chosen = [] {
    const char* forced = std::getenv("PLENOPTIC_SIMD");
    if (forced != nullptr && std::string(forced) == "scalar") return Backend::Scalar;
    return backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
  }();
  return chosen;
}

void intersect_pairs(Backend backend, const PairInput& in, const PairOutput& out) {
  const std::size_t n = in.slope1.size();
  if (in.intercept1.size() != n || in.slope2.size() != n || in.intercept2.size() != n ||
      out.z.size() != n || out.y.size() != n || out.status.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "intersect_pairs: span lengths differ");
  }
  if (backend == Backend::Avx2 && backend_available(Backend::Avx2)) {
    detail::intersect_pairs_avx2(in, out);
  } else {
    detail::intersect_pairs_scalar(in, out, 0);
  }
}

}  // namespace plenoptic::kernels
