#pragma once

#include <utility>

#include "bastep/dyadic.hpp"
#include "bastep/interval_set.hpp"

namespace bastep {

/// The nonprincipal ultrafilter on the interval algebra given by evaluation
/// at a fixed non-dyadic rational point in (0,1): a set is a member iff the
/// point lies in it. Non-dyadic keeps every membership decision strict, and
/// the component holding the point can always be shrunk, so no member is
/// minimal.
class PointUltrafilter {
 public:
  explicit PointUltrafilter(Rational point);
  static PointUltrafilter standard() { return PointUltrafilter(Rational(1, 3)); }

  const Rational& point() const { return point_; }

  bool contains(const IntervalSet& a) const;

  /// A member of u properly contained in a (requires a ∈ u): the least-rank
  /// dyadic cell around the point that fits inside a's point-component and
  /// differs from a.
  IntervalSet shrink_member(const IntervalSet& a) const;

  /// The piece [l,r) of a containing the point; requires a ∈ u.
  IntervalSet::Interval point_component(const IntervalSet& a) const;

 private:
  Rational point_;
};

/// Disjoint nonempty x0, x1 ⊆ c with x0, x1 ∉ u, for c ∈ u. Deterministic:
/// with I_k the rank-k cell holding u's point, take the left and right rank-k
/// neighbors of I_k for the least k >= 1 at which both neighbors exist and
/// fit inside c's point-component.
std::pair<IntervalSet, IntervalSet> atomless_split(const IntervalSet& c,
                                                   const PointUltrafilter& u);

}  // namespace bastep
