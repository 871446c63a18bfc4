#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "ipp/geometry.hpp"

namespace ipp {

struct CellIndex {
  int col = 0;
  int row = 0;
  friend bool operator==(CellIndex a, CellIndex b) { return a.col == b.col && a.row == b.row; }
};

// Occupancy thresholds splitting the map into weed / non-weed / unclassified.
struct ClassThresholds {
  double delta_nw = 0.25;
  double delta_w = 0.75;

  ClassThresholds() = default;
  ClassThresholds(double nw, double w);  // validates nw in (0,0.5), w in (0.5,1)
};

// ln(p / (1 - p)), p in (0, 1).
double logit(double p);
// Inverse of logit.
double probability_from_logodds(double logodds);

// Inclusive rectangular cell range; empty when col1 < col0 or row1 < row0.
struct CellBlock {
  int col0 = 0, col1 = -1;
  int row0 = 0, row1 = -1;
  bool empty() const { return col1 < col0 || row1 < row0; }
  std::size_t count() const {
    return empty() ? 0 : static_cast<std::size_t>(col1 - col0 + 1) * (row1 - row0 + 1);
  }
};

// 2D Bernoulli occupancy grid stored in log-odds form. Pure value type:
// copies are independent, no shared state.
class GridMap {
 public:
  // extent must be an integer multiple of resolution (within 1e-9 cells),
  // prior in (0, 1). Throws std::invalid_argument otherwise.
  GridMap(Vec2 extent, double resolution, double prior, Vec2 origin = {0.0, 0.0});

  int cols() const { return cols_; }
  int rows() const { return rows_; }
  std::size_t size() const { return logodds_.size(); }
  double resolution() const { return res_; }
  Vec2 origin() const { return origin_; }
  Vec2 extent() const { return {cols_ * res_, rows_ * res_}; }

  bool in_bounds(CellIndex c) const {
    return c.col >= 0 && c.row >= 0 && c.col < cols_ && c.row < rows_;
  }

  double log_odds(CellIndex c) const { return logodds_[idx(c)]; }
  double probability(CellIndex c) const { return probability_from_logodds(logodds_[idx(c)]); }
  void set_log_odds(CellIndex c, double value);

  // Additive log-odds fusion of one observation, clamped to +-kLogOddsClamp.
  // p_obs must lie in (0, 1); p_obs = 0.5 leaves the cell unchanged.
  void fuse(CellIndex c, double p_obs);

  // Most-likely-label fusion over a block: cells with L >= 0 receive l_pos,
  // the rest l_neg (log-odds increments).
  void ml_fuse_block(const CellBlock& block, double l_pos, double l_neg);

  // Total map entropy in nats.
  double entropy() const;

  std::size_t unclassified_count(const ClassThresholds& th) const;
  std::vector<CellIndex> unclassified_cells(const ClassThresholds& th) const;
  double classification_rate(const ClassThresholds& th) const;

  Vec2 cell_center(CellIndex c) const {
    return {origin_.x + (c.col + 0.5) * res_, origin_.y + (c.row + 0.5) * res_};
  }
  // Cells whose centers lie inside the closed square [center +- half_width].
  CellBlock cells_in_square(Vec2 center, double half_width) const;

  std::span<const double> log_odds_raw() const { return logodds_; }

  // Plain-text probability grid, row-major, 6 decimal places.
  void write_snapshot(std::ostream& os) const;

  friend bool operator==(const GridMap& a, const GridMap& b) = default;

  static constexpr double kLogOddsClamp = 50.0;

 private:
  std::size_t idx(CellIndex c) const;

  Vec2 origin_;
  double res_;
  int cols_;
  int rows_;
  std::vector<double> logodds_;
};

}  // namespace ipp
