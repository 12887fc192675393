#include "bastep/predicates.hpp"

namespace bastep {

bool is_ideal_independent(std::span<const IntervalSet> family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    IntervalSet others;
    for (std::size_t j = 0; j < family.size(); ++j)
      if (j != i) others = set_union(others, family[j]);
    if (is_subset(family[i], others)) return false;
  }
  return true;
}

std::optional<std::size_t> free_violation_split(std::span<const IntervalSet> seq) {
  for (std::size_t s = 0; s <= seq.size(); ++s) {
    IntervalSet prod = IntervalSet::full();
    for (std::size_t i = 0; i < s && !prod.empty(); ++i) prod = set_intersect(prod, seq[i]);
    for (std::size_t j = s; j < seq.size() && !prod.empty(); ++j)
      prod = set_diff(prod, seq[j]);
    if (prod.empty()) return s;
  }
  return std::nullopt;
}

bool is_free_sequence(std::span<const IntervalSet> seq) {
  return !free_violation_split(seq).has_value();
}

}  // namespace bastep
