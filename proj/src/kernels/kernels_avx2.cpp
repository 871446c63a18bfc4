// AVX2 variants of the log-odds kernels. Compiled with -mavx2 -mfma; the
// dispatcher only routes here after a CPUID check.

#include "ipp/kernels.hpp"
#include "kernels_impl.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace ipp::kernels::detail {

namespace {

// e^x for x in [-60, 0]. Cody-Waite range reduction against ln 2 followed
// by a degree-13 Taylor polynomial on |r| <= ln(2)/2. The 2^n scaling stays
// in the normal range for the inputs produced by clamped log-odds.
inline __m256d exp_neg(__m256d x) {
  const __m256d inv_ln2 = _mm256_set1_pd(1.4426950408889634074);
  const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);

  const __m256d nf = _mm256_round_pd(_mm256_mul_pd(x, inv_ln2),
                                     _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(nf, ln2_hi, x);
  r = _mm256_fnmadd_pd(nf, ln2_lo, r);

  __m256d p = _mm256_set1_pd(1.6059043836821613e-10);  // 1/13!
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(2.0876756987868096e-09));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(2.5052108385441720e-08));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(2.7557319223985893e-07));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(2.7557319223985888e-06));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(2.4801587301587302e-05));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.9841269841269841e-04));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.3888888888888889e-03));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(8.3333333333333333e-03));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(4.1666666666666664e-02));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.6666666666666666e-01));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(5.0e-01));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));

  const __m128i n32 = _mm256_cvtpd_epi32(nf);
  const __m256i n64 = _mm256_cvtepi32_epi64(n32);
  const __m256i biased = _mm256_add_epi64(n64, _mm256_set1_epi64x(1023));
  const __m256d pow2 = _mm256_castsi256_pd(_mm256_slli_epi64(biased, 52));
  return _mm256_mul_pd(p, pow2);
}

// log(1 + t) for t in [0, 1] via 2*atanh(t/(t+2)); the argument then lies
// in [0, 1/3] where the odd series converges quickly.
inline __m256d log1p_01(__m256d t) {
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d s = _mm256_div_pd(t, _mm256_add_pd(t, two));
  const __m256d s2 = _mm256_mul_pd(s, s);

  __m256d p = _mm256_set1_pd(1.0 / 25.0);
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / 23.0));
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / 21.0));
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / 19.0));
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / 17.0));
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / 15.0));
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / 13.0));
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / 11.0));
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / 9.0));
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / 7.0));
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / 5.0));
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / 3.0));
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0));
  return _mm256_mul_pd(_mm256_mul_pd(two, s), p);
}

// Per-lane Bernoulli entropy: H = log1p(e^-a) + a*e^-a/(1+e^-a), a = |L|.
inline __m256d cell_entropy_pd(__m256d logodds) {
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFll));
  const __m256d a = _mm256_and_pd(logodds, abs_mask);
  const __m256d e = exp_neg(_mm256_sub_pd(_mm256_setzero_pd(), a));
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d tail = _mm256_div_pd(_mm256_mul_pd(a, e), _mm256_add_pd(one, e));
  return _mm256_add_pd(log1p_01(e), tail);
}

}  // namespace

double entropy_sum_avx2(const double* v, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, cell_entropy_pd(_mm256_loadu_pd(v + i)));
  }
  // Fixed lane order so repeated runs reduce identically.
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = ((lanes[0] + lanes[1]) + lanes[2]) + lanes[3];
  for (; i < n; ++i) sum += cell_entropy(v[i]);
  return sum;
}

std::size_t band_count_avx2(const double* v, std::size_t n, double lo, double hi) {
  const __m256d vlo = _mm256_set1_pd(lo);
  const __m256d vhi = _mm256_set1_pd(hi);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(v + i);
    const __m256d in = _mm256_and_pd(_mm256_cmp_pd(x, vlo, _CMP_GT_OQ),
                                     _mm256_cmp_pd(x, vhi, _CMP_LT_OQ));
    count += static_cast<std::size_t>(__builtin_popcount(_mm256_movemask_pd(in)));
  }
  for (; i < n; ++i) {
    if (v[i] > lo && v[i] < hi) ++count;
  }
  return count;
}

void ml_fuse_avx2(double* v, std::size_t n, double l_pos, double l_neg, double clamp) {
  const __m256d vpos = _mm256_set1_pd(l_pos);
  const __m256d vneg = _mm256_set1_pd(l_neg);
  const __m256d vclamp = _mm256_set1_pd(clamp);
  const __m256d vnclamp = _mm256_set1_pd(-clamp);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(v + i);
    const __m256d ge = _mm256_cmp_pd(x, zero, _CMP_GE_OQ);
    const __m256d delta = _mm256_blendv_pd(vneg, vpos, ge);
    __m256d y = _mm256_add_pd(x, delta);
    y = _mm256_min_pd(y, vclamp);
    y = _mm256_max_pd(y, vnclamp);
    _mm256_storeu_pd(v + i, y);
  }
  for (; i < n; ++i) {
    double x = v[i] + (v[i] >= 0.0 ? l_pos : l_neg);
    if (x > clamp) x = clamp;
    if (x < -clamp) x = -clamp;
    v[i] = x;
  }
}

}  // namespace ipp::kernels::detail

#endif  // __AVX2__ && __FMA__
