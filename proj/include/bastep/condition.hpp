#pragma once

#include <memory>

#include <nlohmann/json.hpp>

#include "bastep/interval_set.hpp"
#include "bastep/ultrafilter.hpp"

namespace bastep {

/// A forcing condition: a pair of disjoint sets, both outside the
/// ultrafilter. Validated at construction; every extender output goes back
/// through this constructor.
class Condition {
 public:
  Condition(IntervalSet p0, IntervalSet p1, const PointUltrafilter& u);

  static Condition root() { return Condition(); }  // (∅,∅)

  const IntervalSet& p0() const { return p0_; }
  const IntervalSet& p1() const { return p1_; }
  bool is_root() const { return p0_.empty() && p1_.empty(); }

  friend bool operator==(const Condition&, const Condition&) = default;

  nlohmann::json to_json() const { return {{"p0", p0_.str()}, {"p1", p1_.str()}}; }

 private:
  Condition() = default;

  IntervalSet p0_, p1_;
};

using ConditionPtr = std::shared_ptr<const Condition>;

/// p extends (is stronger than) q: coordinatewise reverse inclusion.
bool leq(const Condition& p, const Condition& q);

/// The one extension step the density arguments lean on: for x outside u,
/// q0 = p0 ∪ (-p1 ∩ x), q1 = p1 ∪ (-q0 ∩ x) gives a condition below p that
/// covers x with its two coordinates.
Condition star_extend(const Condition& p, const IntervalSet& x, const PointUltrafilter& u);

struct DerivedParts {
  IntervalSet p_star;  // (e ∩ p0) ∪ (f ∩ p1)
  IntervalSet a_p;     // complement of p0 ∪ p1
  IntervalSet e_p;     // a_p ∩ e
  IntervalSet f_p;     // a_p ∩ f
};

DerivedParts derived_parts(const Condition& p, const IntervalSet& e, const IntervalSet& f);

}  // namespace bastep
