#pragma once

#include <vector>

#include "fsvie/rng.hpp"
#include "fsvie/time_grid.hpp"

namespace fsvie {

/// Two discretized Brownian paths on the main grid [0, t_end], with
/// per-step increment correlation rho. b1[0] = b2[0] = 0; length n_main+1.
struct BrownianPair {
  TimeGrid grid;
  std::vector<double> b1;
  std::vector<double> b2;
  double rho = 0.0;
};

/// Increments: db1 = sqrt(dt) xi, db2 = sqrt(dt) (rho xi + sqrt(1-rho^2) eta)
/// with xi, eta independent standard normals from the seeded stream.
BrownianPair sample_brownian_pair(const TimeGrid& grid, double rho, const SeedSpec& seed);

}  // namespace fsvie
