#pragma once

#include <cstdint>

#include "thue/event_sequence.hpp"

namespace thue {

/// Self-contained splitmix64 generator so generated datasets are
/// reproducible from the seed alone, independent of the standard library's
/// engines. Integer draws are bit-portable; the floating-point helpers
/// (unit, gaussian) go through libm, so cross-platform identity only holds
/// where exp/log/sqrt/cos round identically (in practice: everywhere the
/// suite runs, and always on one machine).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n); n >= 1.
  std::uint64_t below(std::uint64_t n);

  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi);

  /// Standard normal via Box-Muller (one value per call, no caching, so the
  /// draw sequence stays a pure function of the call count).
  double gaussian();

private:
  std::uint64_t state_;
};

struct GenParams {
  std::uint64_t seed = 1;
  std::size_t timestamps = 1000;
  std::size_t event_types = 50;
  std::size_t min_set_size = 1;
  std::size_t max_set_size = 4;
  std::int64_t min_quantity = 1;
  std::int64_t max_quantity = 5;

  /// External utilities: round(exp(mu + sigma * N(0,1)) * scale) clamped to
  /// [util_min, util_max] — a long-tailed price distribution.
  double util_mu = 0.0;
  double util_sigma = 1.0;
  double util_scale = 50.0;
  Utility util_min = 1;
  Utility util_max = 1000;

  /// Probability that a timestamp repeats the full set (events and
  /// quantities) of a uniformly chosen earlier timestamp — exercises the
  /// identical-set edge cases in threshold seeding.
  double duplicate_set_probability = 0.0;
};

/// Deterministically generates a sequence from the parameters: catalog
/// utilities first (one draw per event type in id order), then one set per
/// timestamp 1..n. Throws std::invalid_argument on inconsistent parameters
/// (e.g. fewer event types than the maximum set size).
ComplexEventSequence generate(const GenParams& params);

/// Small instance inside the exhaustive-check guard (<= 12 timestamps,
/// <= 5 event types, quantities <= 3, single-digit utilities); every
/// seventh seed forces duplicate sets throughout.
ComplexEventSequence small_random_instance(std::uint64_t seed);

}  // namespace thue
