// Compiled with -mavx2 on x86-64; only entered after a runtime CPU check.

#include "plenoptic/kernels/pair_intersect.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

#include "plenoptic/sle.hpp"

namespace plenoptic::kernels::detail {

void intersect_pairs_avx2(const PairInput& in, const PairOutput& out) {
  const std::size_t n = in.slope1.size();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d ratio = _mm256_set1_pd(sle::kSingularRatio);
  const __m256d sign = _mm256_set1_pd(-0.0);
  const __m256d nan = _mm256_set1_pd(__builtin_nan(""));

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d s1 = _mm256_loadu_pd(in.slope1.data() + i);
    const __m256d c1 = _mm256_loadu_pd(in.intercept1.data() + i);
    const __m256d s2 = _mm256_loadu_pd(in.slope2.data() + i);
    const __m256d c2 = _mm256_loadu_pd(in.intercept2.data() + i);

    const __m256d a0 = _mm256_xor_pd(s1, sign);
    const __m256d a1 = _mm256_xor_pd(s2, sign);
    const __m256d det = _mm256_sub_pd(a0, a1);
    const __m256d norm_sq = _mm256_max_pd(_mm256_add_pd(_mm256_mul_pd(a0, a0), one),
                                          _mm256_add_pd(_mm256_mul_pd(a1, a1), one));
    const __m256d abs_det = _mm256_andnot_pd(sign, det);
    // Ordered compare: NaN determinants count as parallel.
    const __m256d ok = _mm256_cmp_pd(abs_det, _mm256_mul_pd(ratio, norm_sq), _CMP_GE_OQ);

    const __m256d z = _mm256_div_pd(_mm256_sub_pd(c1, c2), det);
    const __m256d y = _mm256_add_pd(_mm256_mul_pd(s1, z), c1);
    _mm256_storeu_pd(out.z.data() + i, _mm256_blendv_pd(nan, z, ok));
    _mm256_storeu_pd(out.y.data() + i, _mm256_blendv_pd(nan, y, ok));

    const int mask = _mm256_movemask_pd(ok);
    for (int lane = 0; lane < 4; ++lane) {
      out.status[i + lane] = (mask >> lane) & 1 ? kPairOk : kPairParallel;
    }
  }
  intersect_pairs_scalar(in, out, i);
}

}  // namespace plenoptic::kernels::detail

#else

namespace plenoptic::kernels::detail {
void intersect_pairs_avx2(const PairInput& in, const PairOutput& out) {
  intersect_pairs_scalar(in, out, 0);
}
}  // namespace plenoptic::kernels::detail

#endif
