#pragma once

#include <cmath>
#include <cstddef>
#include <span>

// Data-parallel inner loops over log-odds arrays. Each operation has a
// scalar reference implementation and an AVX2 variant; the backend is
// selected once at runtime from CPU capabilities and can be pinned for
// equivalence testing.
namespace ipp::kernels {

enum class Backend { Scalar = 0, Avx2 = 1 };

// True when the AVX2 variants were compiled in and the CPU supports them.
bool avx2_available();

Backend active_backend();
// Pin the dispatch to one backend; throws std::runtime_error if unavailable.
void force_backend(Backend b);
// Return to automatic CPU detection.
void reset_backend();

// Sum of per-cell Bernoulli entropies (nats) over log-odds values.
double entropy_sum(std::span<const double> logodds);

// Number of values v with lo < v < hi (strict bounds).
std::size_t band_count(std::span<const double> logodds, double lo, double hi);

// In-place most-likely-label fusion: v += (v >= 0 ? l_pos : l_neg),
// then clamp to [-clamp, clamp].
void ml_fuse(std::span<double> logodds, double l_pos, double l_neg, double clamp);

// Entropy of a single Bernoulli cell given its log-odds, in nats.
// Written in the |L|-reduced form so it is stable for saturated cells.
inline double cell_entropy(double logodds) {
  const double a = std::fabs(logodds);
  const double e = std::exp(-a);
  return std::log1p(e) + a * e / (1.0 + e);
}

}  // namespace ipp::kernels
