#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fsvie {

/// Identifies one reproducible random substream. The same (seed, stream_id)
/// always yields the bit-identical sequence, on any platform this project
/// builds on; distinct stream_ids are independent for practical purposes.
struct SeedSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;

  SeedSpec with_stream(std::uint64_t id) const { return {seed, id}; }
  /// Derives a disjoint family of substreams (e.g. one per experiment).
  SeedSpec offset(std::uint64_t block) const { return {seed, stream_id + (block << 32)}; }
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Substream derivation: the engine state is seeded from
/// splitmix64(splitmix64(seed) ^ splitmix64(stream_id + phi64)), which is
/// the documented contract; the engine itself is std::mt19937_64.
inline std::mt19937_64 make_engine(const SeedSpec& s) {
  const std::uint64_t mixed =
      splitmix64(splitmix64(s.seed) ^ splitmix64(s.stream_id + 0x9E3779B97F4A7C15ULL));
  return std::mt19937_64(mixed);
}

/// Standard normal generator. Box-Muller over the engine's raw output so
/// results do not depend on the standard library's distribution internals.
class NormalSampler {
 public:
  explicit NormalSampler(const SeedSpec& s) : eng_(make_engine(s)) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform_open();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Uniform on (0, 1), top 53 bits, never exactly 0.
  double uniform_open() {
    for (;;) {
      const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
      if (u > 0.0) return u;
    }
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace fsvie
