#pragma once

#include <cstdint>
#include <vector>

#include "ipp/environment.hpp"
#include "ipp/geometry.hpp"
#include "ipp/gridmap.hpp"
#include "ipp/rng.hpp"

namespace ipp {

// Axis-aligned square camera footprint in world coordinates.
struct Footprint {
  Vec2 center;
  double half_width = 0.0;
};

enum class CurveShape { Linear, Sigmoid };

// Down-looking camera + binary weed classifier. The confusion curves start
// at (p_tp0, p_fp0) on the ground and decay to 0.5 at h_max, beyond which
// the classifier carries no information.
struct SensorModel {
  double fov_deg = 60.0;
  double h_max = 45.0;
  double p_tp0 = 0.95;  // P(label w | true w) at altitude 0
  double p_fp0 = 0.05;  // P(label w | true nw) at altitude 0
  double min_meas_interval = 5.0;
  CurveShape shape = CurveShape::Linear;

  void validate() const;  // throws std::invalid_argument on bad parameters

  double half_width_at(double altitude) const;  // altitude * tan(fov/2)
  Footprint footprint_at(Vec3 position) const;  // throws on negative altitude

  double curve_w_given_w(double h) const;
  double curve_w_given_nw(double h) const;
};

// Simulation noise switches; the false-positive cap counts distinct
// true-non-weed cells that have ever reported a weed label.
struct NoiseConfig {
  bool enabled = true;
  std::size_t fp_cell_cap = 800;
  std::uint64_t rng_seed = 0;
};

// Mission-wide false-positive bookkeeping for one ground-truth grid.
class NoiseState {
 public:
  NoiseState() = default;
  explicit NoiseState(std::size_t cell_count) : seen_(cell_count, 0) {}

  std::size_t fp_cells() const { return count_; }
  bool cap_reached(std::size_t cap) const { return count_ >= cap; }
  void mark(std::size_t cell) {
    if (!seen_[cell]) {
      seen_[cell] = 1;
      ++count_;
    }
  }

 private:
  std::vector<std::uint8_t> seen_;
  std::size_t count_ = 0;
};

struct CellObservation {
  CellIndex cell;
  double p_obs;
};

// Stochastic measurement against ground truth. With noise disabled every
// cell reports its modal label; with noise enabled labels are sampled from
// the altitude-h confusion curves, subject to the false-positive cap.
// Cells are visited row-major; at h >= h_max all covered cells report 0.5
// and no randomness is consumed. Empty when the footprint misses the map.
std::vector<CellObservation> simulate_measurement(const GroundTruthGrid& truth,
                                                  const SensorModel& sensor, Vec3 position,
                                                  const NoiseConfig& noise, NoiseState& state,
                                                  Rng& rng);

// Maximum-likelihood measurement against the current belief: each covered
// cell's most likely label (L >= 0 -> weed) is fused at the confidence of
// the given altitude. The input map is untouched.
GridMap simulate_ml_measurement(const GridMap& map, const SensorModel& sensor, Vec3 position);

// In-place variant for planner candidate evaluation.
void simulate_ml_measurement_inplace(GridMap& map, const SensorModel& sensor, Vec3 position);

}  // namespace ipp
