#include "fsvie/fuzzy_number.hpp"

#include <cmath>
#include <stdexcept>

namespace fsvie {

namespace {

void require_same_grid(const FuzzyNumber& u, const FuzzyNumber& v, const char* op) {
  if (!same_grid(u.grid_ptr(), v.grid_ptr())) {
    throw GridMismatchError(std::string(op) + ": operands use different alpha grids");
  }
}

}  // namespace

FuzzyNumber::FuzzyNumber(AlphaGridPtr grid, std::vector<Interval> cuts)
    : grid_(std::move(grid)), cuts_(std::move(cuts)) {
  if (!grid_) throw std::invalid_argument("FuzzyNumber: null alpha grid");
  if (cuts_.size() != grid_->size()) {
    throw std::invalid_argument("FuzzyNumber: cut count does not match grid levels");
  }
}

FuzzyNumber FuzzyNumber::crisp(double r, AlphaGridPtr grid) {
  if (!std::isfinite(r)) throw std::invalid_argument("embed: value must be finite");
  if (!grid) throw std::invalid_argument("embed: null alpha grid");
  return FuzzyNumber(grid, std::vector<Interval>(grid->size(), Interval{r, r}));
}

FuzzyNumber FuzzyNumber::triangular(double lo, double peak, double hi, AlphaGridPtr grid) {
  if (!(lo <= peak && peak <= hi)) {
    throw std::invalid_argument("triangular: need lo <= peak <= hi");
  }
  if (!grid) throw std::invalid_argument("triangular: null alpha grid");
  std::vector<Interval> cuts(grid->size());
  for (std::size_t k = 0; k < grid->size(); ++k) {
    const double a = grid->level(k);
    cuts[k] = {lo + a * (peak - lo), hi - a * (hi - peak)};
  }
  cuts.back() = {peak, peak};
  return FuzzyNumber(std::move(grid), std::move(cuts));
}

bool FuzzyNumber::crisp_valued(double tol) const {
  return cuts_.front().width() <= tol;
}

FuzzyNumber embed(double r, AlphaGridPtr grid) {
  return FuzzyNumber::crisp(r, std::move(grid));
}

FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v) {
  require_same_grid(u, v, "add");
  std::vector<Interval> cuts(u.levels());
  for (std::size_t k = 0; k < u.levels(); ++k) {
    cuts[k] = u.cut(k) + v.cut(k);
  }
  return FuzzyNumber(u.grid_ptr(), std::move(cuts));
}

FuzzyNumber scalar_mul(double beta, const FuzzyNumber& u) {
  if (!std::isfinite(beta)) throw std::invalid_argument("scalar_mul: factor must be finite");
  std::vector<Interval> cuts(u.levels());
  for (std::size_t k = 0; k < u.levels(); ++k) {
    cuts[k] = scale(beta, u.cut(k));
  }
  return FuzzyNumber(u.grid_ptr(), std::move(cuts));
}

HukuharaResult hukuhara_sub(const FuzzyNumber& u, const FuzzyNumber& v) {
  require_same_grid(u, v, "hukuhara_sub");
  const std::size_t m = u.levels();
  std::vector<Interval> cuts(m);
  for (std::size_t k = 0; k < m; ++k) {
    // Forced by u = v (+) w per level.
    cuts[k] = {u.cut(k).lo - v.cut(k).lo, u.cut(k).hi - v.cut(k).hi};
    if (cuts[k].lo > cuts[k].hi) {
      HukuharaResult r;
      r.failure = HukuharaFailureKind::width;
      r.fail_level = k;
      r.deficit = cuts[k].lo - cuts[k].hi;  // width(v) - width(u) at this level
      return r;
    }
  }
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (!cuts[k].contains(cuts[k + 1])) {
      HukuharaResult r;
      r.failure = HukuharaFailureKind::nesting;
      r.fail_level = k + 1;
      r.deficit = std::max(cuts[k].lo - cuts[k + 1].lo, cuts[k + 1].hi - cuts[k].hi);
      return r;
    }
  }
  HukuharaResult r;
  r.value = FuzzyNumber(u.grid_ptr(), std::move(cuts));
  return r;
}

double d_inf(const FuzzyNumber& u, const FuzzyNumber& v) {
  require_same_grid(u, v, "d_inf");
  double d = 0.0;
  for (std::size_t k = 0; k < u.levels(); ++k) {
    d = std::max(d, hausdorff(u.cut(k), v.cut(k)));
  }
  return d;
}

double norm_f(const FuzzyNumber& u) {
  double n = 0.0;
  for (const Interval& c : u.cuts()) {
    n = std::max({n, std::abs(c.lo), std::abs(c.hi)});
  }
  return n;
}

ValidationReport validate(const FuzzyNumber& u) {
  ValidationReport rep;
  for (std::size_t k = 0; k < u.levels(); ++k) {
    if (!u.cut(k).valid()) {
      rep.ok = false;
      rep.kind = ValidationReport::Kind::ordering;
      rep.level = k;
      rep.message = "cut endpoints out of order or non-finite at level " + std::to_string(k);
      return rep;
    }
  }
  for (std::size_t k = 0; k + 1 < u.levels(); ++k) {
    if (!u.cut(k).contains(u.cut(k + 1))) {
      rep.ok = false;
      rep.kind = ValidationReport::Kind::nesting;
      rep.level = k + 1;
      rep.message = "cut at level " + std::to_string(k + 1) +
                    " leaves cut at level " + std::to_string(k);
      return rep;
    }
  }
  return rep;
}

bool fuzzy_equal(const FuzzyNumber& u, const FuzzyNumber& v, double tol) {
  if (!same_grid(u.grid_ptr(), v.grid_ptr())) return false;
  for (std::size_t k = 0; k < u.levels(); ++k) {
    if (std::abs(u.cut(k).lo - v.cut(k).lo) > tol) return false;
    if (std::abs(u.cut(k).hi - v.cut(k).hi) > tol) return false;
  }
  return true;
}

}  // namespace fsvie
