#include "ipp/environment.hpp"

#include <numeric>
#include <stdexcept>

#include "ipp/rng.hpp"

namespace ipp {

std::size_t GroundTruthGrid::weed_count() const {
  return std::accumulate(weed.begin(), weed.end(), std::size_t{0});
}

GroundTruthGrid generate_environment(Vec2 extent, double resolution, double n_weeds_mean,
                                     std::uint64_t seed) {
  if (!(n_weeds_mean > 0.0)) {
    throw std::invalid_argument("n_weeds_mean must be positive");
  }
  // Reuse GridMap's geometry validation.
  const GridMap geom(extent, resolution, 0.5);

  GroundTruthGrid g;
  g.resolution = resolution;
  g.cols = geom.cols();
  g.rows = geom.rows();
  g.weed.assign(g.cell_count(), 0);

  Rng rng(seed);
  const std::uint64_t n = rng.poisson(n_weeds_mean);
  if (n > g.cell_count()) {
    throw std::runtime_error("weed draw exceeds cell count");
  }

  // Partial Fisher-Yates over cell indices.
  std::vector<std::uint32_t> cells(g.cell_count());
  std::iota(cells.begin(), cells.end(), 0u);
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t j = i + rng.uniform_int(cells.size() - i);
    std::swap(cells[i], cells[j]);
    g.weed[cells[i]] = 1;
  }
  return g;
}

}  // namespace ipp
