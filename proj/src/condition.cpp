#include "bastep/condition.hpp"

namespace bastep {

Condition::Condition(IntervalSet p0, IntervalSet p1, const PointUltrafilter& u)
    : p0_(std::move(p0)), p1_(std::move(p1)) {
  if (!is_empty(set_intersect(p0_, p1_)))
    throw Error("condition: coordinates must be disjoint");
  if (u.contains(p0_) || u.contains(p1_))
    throw Error("condition: coordinates must avoid the ultrafilter");
}

bool leq(const Condition& p, const Condition& q) {
  return is_subset(q.p0(), p.p0()) && is_subset(q.p1(), p.p1());
}

Condition star_extend(const Condition& p, const IntervalSet& x, const PointUltrafilter& u) {
  if (u.contains(x)) throw Error("star_extend: x must avoid the ultrafilter");
  IntervalSet q0 = set_union(p.p0(), set_intersect(set_complement(p.p1()), x));
  IntervalSet q1 = set_union(p.p1(), set_intersect(set_complement(q0), x));
  return Condition(std::move(q0), std::move(q1), u);
}

DerivedParts derived_parts(const Condition& p, const IntervalSet& e, const IntervalSet& f) {
  DerivedParts d;
  d.p_star = set_union(set_intersect(e, p.p0()), set_intersect(f, p.p1()));
  d.a_p = set_complement(set_union(p.p0(), p.p1()));
  d.e_p = set_intersect(d.a_p, e);
  d.f_p = set_intersect(d.a_p, f);
  return d;
}

}  // namespace bastep
