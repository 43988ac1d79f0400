#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fsvie/alpha_grid.hpp"
#include "fsvie/interval.hpp"

namespace fsvie {

/// Fuzzy number over the real line stored as a stack of nested alpha-level
/// intervals, one per level of an AlphaGrid. cut(0) is the support, the
/// last cut is the core. Immutable after construction; all operations
/// below are pure functions and safe to use concurrently.
class FuzzyNumber {
 public:
  FuzzyNumber(AlphaGridPtr grid, std::vector<Interval> cuts);

  /// The embedding <r>: every level the singleton [r, r].
  static FuzzyNumber crisp(double r, AlphaGridPtr grid);

  /// Triangular number with the given support endpoints and peak.
  static FuzzyNumber triangular(double lo, double peak, double hi, AlphaGridPtr grid);

  const AlphaGrid& grid() const { return *grid_; }
  const AlphaGridPtr& grid_ptr() const { return grid_; }

  std::size_t levels() const { return cuts_.size(); }
  const Interval& cut(std::size_t k) const { return cuts_[k]; }
  std::span<const Interval> cuts() const { return cuts_; }

  const Interval& support() const { return cuts_.front(); }
  const Interval& core() const { return cuts_.back(); }
  double core_mid() const { return cuts_.back().mid(); }

  /// True when every cut is a point (width zero within tol).
  bool crisp_valued(double tol = 0.0) const;

  friend bool operator==(const FuzzyNumber& a, const FuzzyNumber& b) {
    return same_grid(a.grid_, b.grid_) && a.cuts_ == b.cuts_;
  }

 private:
  AlphaGridPtr grid_;
  std::vector<Interval> cuts_;
};

/// Alias of FuzzyNumber::crisp matching the embedding notation.
FuzzyNumber embed(double r, AlphaGridPtr grid);

/// Levelwise Minkowski sum. Throws GridMismatchError on different grids.
FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v);

/// Levelwise scalar multiple; negative factors reflect every cut.
FuzzyNumber scalar_mul(double beta, const FuzzyNumber& u);

enum class HukuharaFailureKind { none, width, nesting };

/// Outcome of a Hukuhara difference. On failure carries the first level
/// where the candidate broke down and by how much, which the solver
/// surfaces as an (H3) diagnostic.
struct HukuharaResult {
  std::optional<FuzzyNumber> value;
  HukuharaFailureKind failure = HukuharaFailureKind::none;
  std::size_t fail_level = 0;
  double deficit = 0.0;

  explicit operator bool() const { return value.has_value(); }
};

/// Hukuhara difference: the unique w with u = v (+) w, when it exists.
/// Exists iff per level width(u) >= width(v) and the endpoint differences
/// stay nested across levels.
HukuharaResult hukuhara_sub(const FuzzyNumber& u, const FuzzyNumber& v);

/// Supremum over grid levels of the interval Hausdorff distance.
double d_inf(const FuzzyNumber& u, const FuzzyNumber& v);

/// d_inf(u, <0>): the largest endpoint magnitude over all cuts.
double norm_f(const FuzzyNumber& u);

struct ValidationReport {
  bool ok = true;
  enum class Kind { none, ordering, nesting } kind = Kind::none;
  std::size_t level = 0;
  std::string message;
};

/// Checks lo <= hi per level and nestedness across levels. Returns a
/// report instead of throwing.
ValidationReport validate(const FuzzyNumber& u);

/// Endpoint-wise comparison with absolute tolerance.
bool fuzzy_equal(const FuzzyNumber& u, const FuzzyNumber& v, double tol);

}  // namespace fsvie
