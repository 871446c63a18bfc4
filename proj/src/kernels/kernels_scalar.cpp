#include "ipp/kernels.hpp"
#include "kernels_impl.hpp"

namespace ipp::kernels::detail {

double entropy_sum_scalar(const double* v, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += cell_entropy(v[i]);
  return sum;
}

std::size_t band_count_scalar(const double* v, std::size_t n, double lo, double hi) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] > lo && v[i] < hi) ++count;
  }
  return count;
}

void ml_fuse_scalar(double* v, std::size_t n, double l_pos, double l_neg, double clamp) {
  for (std::size_t i = 0; i < n; ++i) {
    double x = v[i] + (v[i] >= 0.0 ? l_pos : l_neg);
    if (x > clamp) x = clamp;
    if (x < -clamp) x = -clamp;
    v[i] = x;
  }
}

}  // namespace ipp::kernels::detail
