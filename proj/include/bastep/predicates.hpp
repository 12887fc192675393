#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bastep/interval_set.hpp"

namespace bastep {

/// No member lies below the union of the others (for a finite family the
/// generated ideal is the down-set of the union).
bool is_ideal_independent(std::span<const IntervalSet> family);

/// Every product (meet of an initial group) ∩ (meet of complements of a later
/// group) is nonzero; empty products count as the top element. It suffices to
/// test, for each split point s, the full product of the first s terms
/// against the complements of the rest: every admissible pair of index sets
/// sits inside such a split, and shrinking a product only grows it.
bool is_free_sequence(std::span<const IntervalSet> seq);

/// The least split s whose full product vanishes, if any.
std::optional<std::size_t> free_violation_split(std::span<const IntervalSet> seq);

}  // namespace bastep
