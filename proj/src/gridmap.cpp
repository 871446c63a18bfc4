#include "ipp/gridmap.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ipp/kernels.hpp"

namespace ipp {

ClassThresholds::ClassThresholds(double nw, double w) : delta_nw(nw), delta_w(w) {
  if (!(nw > 0.0 && nw < 0.5)) {
    throw std::invalid_argument("delta_nw must lie in (0, 0.5)");
  }
  if (!(w > 0.5 && w < 1.0)) {
    throw std::invalid_argument("delta_w must lie in (0.5, 1)");
  }
}

double logit(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("probability must lie in (0, 1)");
  }
  return std::log(p) - std::log1p(-p);
}

double probability_from_logodds(double logodds) { return 1.0 / (1.0 + std::exp(-logodds)); }

GridMap::GridMap(Vec2 extent, double resolution, double prior, Vec2 origin)
    : origin_(origin), res_(resolution) {
  if (!(resolution > 0.0)) {
    throw std::invalid_argument("resolution must be positive");
  }
  if (!(extent.x > 0.0 && extent.y > 0.0)) {
    throw std::invalid_argument("extent must be positive");
  }
  const double fx = extent.x / resolution;
  const double fy = extent.y / resolution;
  const double rx = std::round(fx);
  const double ry = std::round(fy);
  if (std::fabs(fx - rx) > 1e-9 || std::fabs(fy - ry) > 1e-9) {
    throw std::invalid_argument("extent is not a multiple of resolution");
  }
  cols_ = static_cast<int>(rx);
  rows_ = static_cast<int>(ry);
  logodds_.assign(static_cast<std::size_t>(cols_) * rows_, logit(prior));
}

std::size_t GridMap::idx(CellIndex c) const {
  if (!in_bounds(c)) {
    throw std::out_of_range("cell index (" + std::to_string(c.col) + ", " +
                            std::to_string(c.row) + ") outside grid");
  }
  return static_cast<std::size_t>(c.row) * cols_ + c.col;
}

void GridMap::set_log_odds(CellIndex c, double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("log-odds must be finite");
  }
  logodds_[idx(c)] = value;
}

void GridMap::fuse(CellIndex c, double p_obs) {
  const std::size_t i = idx(c);
  double x = logodds_[i] + logit(p_obs);
  if (x > kLogOddsClamp) x = kLogOddsClamp;
  if (x < -kLogOddsClamp) x = -kLogOddsClamp;
  logodds_[i] = x;
}

void GridMap::ml_fuse_block(const CellBlock& block, double l_pos, double l_neg) {
  if (block.empty()) return;
  if (block.col0 < 0 || block.row0 < 0 || block.col1 >= cols_ || block.row1 >= rows_) {
    throw std::out_of_range("cell block outside grid");
  }
  const std::size_t len = static_cast<std::size_t>(block.col1 - block.col0 + 1);
  for (int r = block.row0; r <= block.row1; ++r) {
    double* row = logodds_.data() + static_cast<std::size_t>(r) * cols_ + block.col0;
    kernels::ml_fuse({row, len}, l_pos, l_neg, kLogOddsClamp);
  }
}

double GridMap::entropy() const { return kernels::entropy_sum(logodds_); }

std::size_t GridMap::unclassified_count(const ClassThresholds& th) const {
  return kernels::band_count(logodds_, logit(th.delta_nw), logit(th.delta_w));
}

std::vector<CellIndex> GridMap::unclassified_cells(const ClassThresholds& th) const {
  const double lo = logit(th.delta_nw);
  const double hi = logit(th.delta_w);
  std::vector<CellIndex> cells;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      const double v = logodds_[static_cast<std::size_t>(r) * cols_ + c];
      if (v > lo && v < hi) cells.push_back({c, r});
    }
  }
  return cells;
}

double GridMap::classification_rate(const ClassThresholds& th) const {
  return 1.0 - static_cast<double>(unclassified_count(th)) / static_cast<double>(size());
}

CellBlock GridMap::cells_in_square(Vec2 center, double half_width) const {
  if (half_width < 0.0) return {};
  // Cell centers at origin + (i + 0.5) * res; membership by closed square.
  const double eps = 1e-12;
  CellBlock b;
  b.col0 = static_cast<int>(std::ceil((center.x - half_width - origin_.x) / res_ - 0.5 - eps));
  b.col1 = static_cast<int>(std::floor((center.x + half_width - origin_.x) / res_ - 0.5 + eps));
  b.row0 = static_cast<int>(std::ceil((center.y - half_width - origin_.y) / res_ - 0.5 - eps));
  b.row1 = static_cast<int>(std::floor((center.y + half_width - origin_.y) / res_ - 0.5 + eps));
  b.col0 = std::max(b.col0, 0);
  b.row0 = std::max(b.row0, 0);
  b.col1 = std::min(b.col1, cols_ - 1);
  b.row1 = std::min(b.row1, rows_ - 1);
  return b;
}

void GridMap::write_snapshot(std::ostream& os) const {
  char buf[16];
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      const double p = probability_from_logodds(logodds_[static_cast<std::size_t>(r) * cols_ + c]);
      std::snprintf(buf, sizeof(buf), "%.6f", p);
      os << buf;
      os << (c + 1 < cols_ ? ' ' : '\n');
    }
  }
}

}  // namespace ipp
