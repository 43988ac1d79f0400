#include "fsvie/time_grid.hpp"

#include <cmath>
#include <string>

namespace fsvie {

namespace {

// Nearest integer step count, or -1 when the ratio is not integral
// within relative tolerance 1e-9.
long long integral_steps(double value, double dt) {
  const double ratio = value / dt;
  const double rounded = std::round(ratio);
  const double tol = 1e-9 * std::max(1.0, std::abs(ratio));
  if (std::abs(ratio - rounded) > tol) return -1;
  return static_cast<long long>(rounded);
}

}  // namespace

TimeGrid make_grid(double tau, double t_end, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidGridError("make_grid: dt must be positive");
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw InvalidGridError("make_grid: tau must be >= 0");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw InvalidGridError("make_grid: t_end must be > 0");

  const long long n_pre = integral_steps(tau, dt);
  if (n_pre < 0) {
    throw InvalidGridError("make_grid: tau = " + std::to_string(tau) +
                           " is not an integer multiple of dt = " + std::to_string(dt));
  }
  const long long n_main = integral_steps(t_end, dt);
  if (n_main < 0) {
    throw InvalidGridError("make_grid: t_end = " + std::to_string(t_end) +
                           " is not an integer multiple of dt = " + std::to_string(dt));
  }

  TimeGrid g;
  g.tau = tau;
  g.t_end = t_end;
  g.dt = dt;
  g.n_pre = static_cast<std::size_t>(n_pre);
  g.n_main = static_cast<std::size_t>(n_main);
  return g;
}

}  // namespace fsvie
