#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <vector>

namespace fsvie {

/// Discretization of the membership axis: levels 0 = a0 < a1 < ... < am = 1.
/// Shared immutably between all fuzzy numbers built on it.
class AlphaGrid {
 public:
  static std::shared_ptr<const AlphaGrid> uniform(std::size_t m = 10) {
    if (m < 1) throw std::invalid_argument("AlphaGrid: need at least levels 0 and 1");
    std::vector<double> levels(m + 1);
    for (std::size_t k = 0; k <= m; ++k) {
      levels[k] = static_cast<double>(k) / static_cast<double>(m);
    }
    levels.back() = 1.0;
    return std::shared_ptr<const AlphaGrid>(new AlphaGrid(std::move(levels)));
  }

  static std::shared_ptr<const AlphaGrid> from_levels(std::vector<double> levels) {
    if (levels.size() < 2 || levels.front() != 0.0 || levels.back() != 1.0) {
      throw std::invalid_argument("AlphaGrid: levels must start at 0 and end at 1");
    }
    for (std::size_t k = 1; k < levels.size(); ++k) {
      if (!(levels[k] > levels[k - 1])) {
        throw std::invalid_argument("AlphaGrid: levels must be strictly increasing");
      }
    }
    return std::shared_ptr<const AlphaGrid>(new AlphaGrid(std::move(levels)));
  }

  std::size_t size() const { return levels_.size(); }
  double level(std::size_t k) const { return levels_[k]; }
  const std::vector<double>& levels() const { return levels_; }

  friend bool operator==(const AlphaGrid& a, const AlphaGrid& b) {
    return a.levels_ == b.levels_;
  }

 private:
  explicit AlphaGrid(std::vector<double> levels) : levels_(std::move(levels)) {}
  std::vector<double> levels_;
};

using AlphaGridPtr = std::shared_ptr<const AlphaGrid>;

/// Two grids are interchangeable when they are the same object or hold
/// identical levels. Anything else is a hard error, never resampled.
inline bool same_grid(const AlphaGridPtr& a, const AlphaGridPtr& b) {
  return a == b || (a && b && *a == *b);
}

struct GridMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace fsvie
