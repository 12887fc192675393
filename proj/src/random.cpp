#include "bastep/random.hpp"

namespace bastep {

IntervalSet random_set(SplitMix64& rng, std::uint32_t max_rank, std::uint32_t max_cells) {
  IntervalSet out;
  std::uint64_t cells = rng.below(max_cells + 1);
  for (std::uint64_t c = 0; c < cells; ++c) {
    std::uint32_t k = 1 + static_cast<std::uint32_t>(rng.below(max_rank));
    BigNat m = rng.below(1ULL << k);
    out = set_union(out, IntervalSet::cell(m, k));
  }
  return out;
}

IntervalSet random_nonmember(SplitMix64& rng, const PointUltrafilter& u,
                             std::uint32_t max_rank, std::uint32_t max_cells) {
  IntervalSet a = random_set(rng, max_rank, max_cells);
  return u.contains(a) ? set_complement(a) : a;
}

Condition random_condition(SplitMix64& rng, const PointUltrafilter& u, std::uint32_t max_rank,
                           std::uint32_t max_cells) {
  IntervalSet guard = IntervalSet::cell(u.point().floor_scaled(2), 2);
  IntervalSet p0 = set_diff(random_set(rng, max_rank, max_cells), guard);
  IntervalSet p1 = set_diff(set_diff(random_set(rng, max_rank, max_cells), guard), p0);
  return Condition(std::move(p0), std::move(p1), u);
}

}  // namespace bastep
