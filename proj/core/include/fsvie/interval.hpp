#pragma once

#include <algorithm>
#include <cmath>

namespace fsvie {

/// Nonempty compact interval [lo, hi] on the real line.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }

  bool valid() const { return std::isfinite(lo) && std::isfinite(hi) && lo <= hi; }

  /// True when `inner` lies inside *this.
  bool contains(const Interval& inner) const {
    return lo <= inner.lo && inner.hi <= hi;
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Minkowski sum: [a,b] + [c,d] = [a+c, b+d].
inline Interval operator+(const Interval& a, const Interval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

/// Scalar multiple; a negative factor reflects the interval.
inline Interval scale(double beta, const Interval& a) {
  if (beta >= 0.0) return {beta * a.lo, beta * a.hi};
  return {beta * a.hi, beta * a.lo};
}

/// Hausdorff distance between intervals: max endpoint gap.
/// Closed form of the sup-inf definition; verified against a sampling
/// oracle in the test suite before anything relies on it.
inline double hausdorff(const Interval& a, const Interval& b) {
  return std::max(std::abs(a.lo - b.lo), std::abs(a.hi - b.hi));
}

/// Distance from a point to an interval (zero inside).
inline double point_to_interval(double x, const Interval& a) {
  return std::max({0.0, a.lo - x, x - a.hi});
}

}  // namespace fsvie
