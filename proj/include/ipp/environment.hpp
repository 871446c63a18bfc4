#pragma once

#include <cstdint>
#include <vector>

#include "ipp/geometry.hpp"
#include "ipp/gridmap.hpp"

namespace ipp {

// Ground-truth weed layout with the same geometry as the mission GridMap.
struct GroundTruthGrid {
  Vec2 origin{0.0, 0.0};
  double resolution = 0.0;
  int cols = 0;
  int rows = 0;
  std::vector<std::uint8_t> weed;  // row-major boolean labels

  bool in_bounds(CellIndex c) const {
    return c.col >= 0 && c.row >= 0 && c.col < cols && c.row < rows;
  }
  bool is_weed(CellIndex c) const {
    return weed[static_cast<std::size_t>(c.row) * cols + c.col] != 0;
  }
  std::size_t cell_count() const { return weed.size(); }
  std::size_t weed_count() const;
  Vec2 extent() const { return {cols * resolution, rows * resolution}; }
};

// Scatters Poisson(n_weeds_mean) weed cells uniformly without replacement.
// Deterministic per seed. Throws if the draw exceeds the cell count.
GroundTruthGrid generate_environment(Vec2 extent, double resolution, double n_weeds_mean,
                                     std::uint64_t seed);

}  // namespace ipp
