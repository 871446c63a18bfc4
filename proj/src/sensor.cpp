#include "ipp/sensor.hpp"

#include <cmath>
#include <stdexcept>

namespace ipp {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void SensorModel::validate() const {
  if (!(fov_deg > 0.0 && fov_deg < 180.0)) {
    throw std::invalid_argument("fov must lie in (0, 180) degrees");
  }
  if (!(h_max > 0.0)) {
    throw std::invalid_argument("h_max must be positive");
  }
  if (!(p_tp0 > 0.5 && p_tp0 < 1.0)) {
    throw std::invalid_argument("p_tp0 must lie in (0.5, 1)");
  }
  if (!(p_fp0 > 0.0 && p_fp0 < 0.5)) {
    throw std::invalid_argument("p_fp0 must lie in (0, 0.5)");
  }
  if (!(min_meas_interval >= 0.0)) {
    throw std::invalid_argument("min_meas_interval must be non-negative");
  }
}

double SensorModel::half_width_at(double altitude) const {
  if (altitude < 0.0) {
    throw std::invalid_argument("altitude must be non-negative");
  }
  return altitude * std::tan(fov_deg * kPi / 360.0);
}

Footprint SensorModel::footprint_at(Vec3 position) const {
  return {{position.x, position.y}, half_width_at(position.z)};
}

namespace {

// Interpolates from v0 at h = 0 to exactly 0.5 at h >= h_max.
double curve_value(double v0, double h, double h_max, CurveShape shape) {
  if (h < 0.0) {
    throw std::invalid_argument("altitude must be non-negative");
  }
  if (h >= h_max) return 0.5;
  const double u = h / h_max;
  switch (shape) {
    case CurveShape::Linear:
      return v0 + (0.5 - v0) * u;
    case CurveShape::Sigmoid:
      // Raised cosine: S-shaped, flat at both ends, 0.5 at h_max.
      return 0.5 + (v0 - 0.5) * 0.5 * (1.0 + std::cos(kPi * u));
  }
  return 0.5;
}

}  // namespace

double SensorModel::curve_w_given_w(double h) const {
  return curve_value(p_tp0, h, h_max, shape);
}

double SensorModel::curve_w_given_nw(double h) const {
  return curve_value(p_fp0, h, h_max, shape);
}

std::vector<CellObservation> simulate_measurement(const GroundTruthGrid& truth,
                                                  const SensorModel& sensor, Vec3 position,
                                                  const NoiseConfig& noise, NoiseState& state,
                                                  Rng& rng) {
  const double half = sensor.half_width_at(position.z);

  // Reuse the grid-map rectangle clip via a throwaway geometry mirror.
  const double eps = 1e-12;
  const double res = truth.resolution;
  int col0 = static_cast<int>(std::ceil((position.x - half - truth.origin.x) / res - 0.5 - eps));
  int col1 = static_cast<int>(std::floor((position.x + half - truth.origin.x) / res - 0.5 + eps));
  int row0 = static_cast<int>(std::ceil((position.y - half - truth.origin.y) / res - 0.5 - eps));
  int row1 = static_cast<int>(std::floor((position.y + half - truth.origin.y) / res - 0.5 + eps));
  col0 = std::max(col0, 0);
  row0 = std::max(row0, 0);
  col1 = std::min(col1, truth.cols - 1);
  row1 = std::min(row1, truth.rows - 1);

  std::vector<CellObservation> out;
  if (col1 < col0 || row1 < row0) return out;
  out.reserve(static_cast<std::size_t>(col1 - col0 + 1) * (row1 - row0 + 1));

  const double h = position.z;
  if (h >= sensor.h_max) {
    // No information at or beyond the maximum operating altitude.
    for (int r = row0; r <= row1; ++r) {
      for (int c = col0; c <= col1; ++c) {
        out.push_back({{c, r}, 0.5});
      }
    }
    return out;
  }

  const double conf_w = sensor.curve_w_given_w(h);
  const double conf_fp = sensor.curve_w_given_nw(h);

  for (int r = row0; r <= row1; ++r) {
    for (int c = col0; c <= col1; ++c) {
      const CellIndex cell{c, r};
      const std::size_t flat = static_cast<std::size_t>(r) * truth.cols + c;
      const bool is_weed = truth.weed[flat] != 0;
      bool label_w;
      if (!noise.enabled) {
        label_w = is_weed;  // modal label: conf_w > 0.5 > conf_fp below h_max
      } else if (is_weed) {
        label_w = rng.uniform01() < conf_w;
      } else {
        label_w = rng.uniform01() < conf_fp;
        if (label_w) {
          if (state.cap_reached(noise.fp_cell_cap)) {
            label_w = false;
          } else {
            state.mark(flat);
          }
        }
      }
      out.push_back({cell, label_w ? conf_w : conf_fp});
    }
  }
  return out;
}

void simulate_ml_measurement_inplace(GridMap& map, const SensorModel& sensor, Vec3 position) {
  const double h = position.z;
  const double half = sensor.half_width_at(h);
  if (h >= sensor.h_max) return;  // 0.5 fusion is the identity
  const CellBlock block = map.cells_in_square({position.x, position.y}, half);
  if (block.empty()) return;
  const double l_pos = logit(sensor.curve_w_given_w(h));
  const double l_neg = logit(sensor.curve_w_given_nw(h));
  map.ml_fuse_block(block, l_pos, l_neg);
}

GridMap simulate_ml_measurement(const GridMap& map, const SensorModel& sensor, Vec3 position) {
  GridMap out = map;
  simulate_ml_measurement_inplace(out, sensor, position);
  return out;
}

}  // namespace ipp
