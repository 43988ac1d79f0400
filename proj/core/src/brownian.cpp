#include "fsvie/brownian.hpp"

#include <cmath>
#include <stdexcept>

namespace fsvie {

BrownianPair sample_brownian_pair(const TimeGrid& grid, double rho, const SeedSpec& seed) {
  if (!(rho >= -1.0 && rho <= 1.0)) {
    throw std::invalid_argument("sample_brownian_pair: |rho| must be <= 1");
  }

  BrownianPair out;
  out.grid = grid;
  out.rho = rho;
  out.b1.assign(grid.n_main + 1, 0.0);
  out.b2.assign(grid.n_main + 1, 0.0);

  NormalSampler rng(seed);
  const double root_dt = std::sqrt(grid.dt);
  const double ortho = std::sqrt(std::max(0.0, 1.0 - rho * rho));
  for (std::size_t k = 0; k < grid.n_main; ++k) {
    const double xi = rng.next();
    const double eta = rng.next();
    out.b1[k + 1] = out.b1[k] + root_dt * xi;
    out.b2[k + 1] = out.b2[k] + root_dt * (rho * xi + ortho * eta);
  }
  return out;
}

}  // namespace fsvie
