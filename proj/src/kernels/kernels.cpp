#include "ipp/kernels.hpp"

#include <atomic>
#include <stdexcept>

#include "kernels_impl.hpp"

namespace ipp::kernels {

namespace {

bool cpu_supports_avx2() {
#if defined(IPP_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

std::atomic<int> g_forced{-1};

Backend resolve() {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Backend>(forced);
  static const bool has_avx2 = cpu_supports_avx2();
  return has_avx2 ? Backend::Avx2 : Backend::Scalar;
}

}  // namespace

bool avx2_available() { return cpu_supports_avx2(); }

Backend active_backend() { return resolve(); }

void force_backend(Backend b) {
  if (b == Backend::Avx2 && !avx2_available()) {
    throw std::runtime_error("kernels: AVX2 backend not available on this CPU/build");
  }
  g_forced.store(static_cast<int>(b), std::memory_order_relaxed);
}

void reset_backend() { g_forced.store(-1, std::memory_order_relaxed); }

double entropy_sum(std::span<const double> logodds) {
#if defined(IPP_HAVE_AVX2_TU)
  if (resolve() == Backend::Avx2) {
    return detail::entropy_sum_avx2(logodds.data(), logodds.size());
  }
#endif
  return detail::entropy_sum_scalar(logodds.data(), logodds.size());
}

std::size_t band_count(std::span<const double> logodds, double lo, double hi) {
#if defined(IPP_HAVE_AVX2_TU)
  if (resolve() == Backend::Avx2) {
    return detail::band_count_avx2(logodds.data(), logodds.size(), lo, hi);
  }
#endif
  return detail::band_count_scalar(logodds.data(), logodds.size(), lo, hi);
}

void ml_fuse(std::span<double> logodds, double l_pos, double l_neg, double clamp) {
#if defined(IPP_HAVE_AVX2_TU)
  if (resolve() == Backend::Avx2) {
    detail::ml_fuse_avx2(logodds.data(), logodds.size(), l_pos, l_neg, clamp);
    return;
  }
#endif
  detail::ml_fuse_scalar(logodds.data(), logodds.size(), l_pos, l_neg, clamp);
}

}  // namespace ipp::kernels
