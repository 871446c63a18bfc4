#pragma once

#include <cstddef>

// Internal: per-backend kernel entry points. The AVX2 symbols are only
// defined when the AVX2 TU is part of the build (IPP_HAVE_AVX2_TU).
namespace ipp::kernels::detail {

double entropy_sum_scalar(const double* v, std::size_t n);
std::size_t band_count_scalar(const double* v, std::size_t n, double lo, double hi);
void ml_fuse_scalar(double* v, std::size_t n, double l_pos, double l_neg, double clamp);

#if defined(IPP_HAVE_AVX2_TU)
double entropy_sum_avx2(const double* v, std::size_t n);
std::size_t band_count_avx2(const double* v, std::size_t n, double lo, double hi);
void ml_fuse_avx2(double* v, std::size_t n, double l_pos, double l_neg, double clamp);
#endif

}  // namespace ipp::kernels::detail
