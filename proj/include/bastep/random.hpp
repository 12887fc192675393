#pragma once

#include <cstdint>

#include "bastep/condition.hpp"

namespace bastep {

/// The one RNG behind every seeded run; the algorithm identifier
/// "splitmix64" is recorded in report headers so runs are portable.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }
};

/// Union of up to max_cells random dyadic cells of rank 1..max_rank; may be
/// empty or everything.
IntervalSet random_set(SplitMix64& rng, std::uint32_t max_rank = 6, std::uint32_t max_cells = 4);

/// A random set outside u (falls back to the complement, which is outside
/// whenever the draw is not).
IntervalSet random_nonmember(SplitMix64& rng, const PointUltrafilter& u,
                             std::uint32_t max_rank = 6, std::uint32_t max_cells = 4);

/// A random valid condition: two disjoint random sets with the rank-2 cell
/// around u's point carved out of both.
Condition random_condition(SplitMix64& rng, const PointUltrafilter& u,
                           std::uint32_t max_rank = 6, std::uint32_t max_cells = 4);

}  // namespace bastep
