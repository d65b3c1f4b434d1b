#pragma once

#include <cstdint>
#include <random>

#include "helly/rational.hpp"

namespace helly {

/// Seeded generator used by every randomized routine: std::mt19937_64 with
/// its own bounded sampling (rejection on raw 64-bit draws), so results do
/// not depend on the standard library's distribution implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Uniform in [0, bound) for bound > 0.
  Integer uniform_below(const Integer &bound);
  bool coin() { return (next() >> 63) != 0; }

private:
  std::mt19937_64 engine_;
};

/// Independent seed for trial `index` of a campaign seeded with `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

} // namespace helly
