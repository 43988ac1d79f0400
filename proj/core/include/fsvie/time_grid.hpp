#pragma once

#include <cstddef>
#include <stdexcept>

namespace fsvie {

struct InvalidGridError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Uniform time grid over [-tau, t_end] with the switch at 0. Both tau and
/// t_end must be integer multiples of dt, so the delayed index s - tau
/// always lands exactly on a node.
struct TimeGrid {
  double tau = 0.0;
  double t_end = 0.0;
  double dt = 0.0;
  std::size_t n_pre = 0;   // steps in [-tau, 0]
  std::size_t n_main = 0;  // steps in [0, t_end]

  std::size_t n_nodes() const { return n_pre + n_main + 1; }

  /// Time of a full-grid node (0 .. n_pre+n_main); node n_pre is t = 0.
  double time_at(std::size_t node) const {
    return (static_cast<double>(node) - static_cast<double>(n_pre)) * dt;
  }

  /// Full-grid index of main node k (time k*dt).
  std::size_t main_node(std::size_t k) const { return n_pre + k; }
};

/// Builds the grid, rejecting non-commensurate tau or t_end (relative
/// tolerance 1e-9) instead of silently rounding.
TimeGrid make_grid(double tau, double t_end, double dt);

}  // namespace fsvie
