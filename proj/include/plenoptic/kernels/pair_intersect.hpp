#pragma once

// Batched intersection of ray pairs y = s1 z + c1 and y = s2 z + c2.
//
// Every backend evaluates exactly the arithmetic of sle::intersect_rays
// (Cramer's rule on [[-s1, 1], [-s2, 1]], then y = s1 z + c1), so results
// are bit-identical to the scalar solver for finite inputs.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace plenoptic::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend backend) noexcept;

/// Whether the running CPU (and this build) can execute the backend.
bool backend_available(Backend backend) noexcept;

/// Best available backend; PLENOPTIC_SIMD=scalar in the environment forces
/// the scalar reference.
Backend default_backend() noexcept;

enum PairStatus : std::uint8_t { kPairOk = 0, kPairParallel = 1 };

struct PairInput {
  std::span<const double> slope1;
  std::span<const double> intercept1;
  std::span<const double> slope2;
  std::span<const double> intercept2;
};

struct PairOutput {
  std::span<double> z;
  std::span<double> y;
  std::span<std::uint8_t> status;
};

/// All spans must share one length. Parallel lanes get status kPairParallel
/// and NaN coordinates.
void intersect_pairs(Backend backend, const PairInput& in, const PairOutput& out);

inline void intersect_pairs(const PairInput& in, const PairOutput& out) {
  intersect_pairs(default_backend(), in, out);
}

namespace detail {
void intersect_pairs_scalar(const PairInput& in, const PairOutput& out, std::size_t begin);
void intersect_pairs_avx2(const PairInput& in, const PairOutput& out);
}  // namespace detail

}  // namespace plenoptic::kernels
