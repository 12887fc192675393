#include "bastep/ultrafilter.hpp"

namespace bastep {

namespace mp = boost::multiprecision;

PointUltrafilter::PointUltrafilter(Rational point) : point_(std::move(point)) {
  if (point_.num().is_zero() || point_.num() >= point_.den())
    throw Error("ultrafilter point must lie strictly inside (0,1)");
  if (point_.is_dyadic())
    throw Error("ultrafilter point must be non-dyadic");
}

bool PointUltrafilter::contains(const IntervalSet& a) const {
  for (const auto& [l, r] : a.pieces()) {
    if (point_.cmp(l) >= 0 && point_.cmp(r) < 0) return true;
    if (point_.cmp(l) < 0) break;  // pieces are sorted
  }
  return false;
}

IntervalSet::Interval PointUltrafilter::point_component(const IntervalSet& a) const {
  for (const auto& iv : a.pieces())
    if (point_.cmp(iv.first) >= 0 && point_.cmp(iv.second) < 0) return iv;
  throw Error("point_component: set not in the ultrafilter");
}

IntervalSet PointUltrafilter::shrink_member(const IntervalSet& a) const {
  auto [l, r] = point_component(a);
  for (std::uint32_t k = 1;; ++k) {
    BigNat m = point_.floor_scaled(k);
    IntervalSet cand = IntervalSet::cell(m, k);
    const auto& [cl, cr] = cand.pieces().front();
    if (!(cl < l) && !(r < cr) && cand != a) return cand;
  }
}

namespace {

// Least k with x*2^k >= y (strict: >) for positive x, y.
std::uint32_t least_shift(const BigNat& x, const BigNat& y, bool strict) {
  unsigned mx = mp::msb(x), my = mp::msb(y);
  std::uint32_t k = my > mx + 1 ? my - mx - 1 : 0;
  while (true) {
    BigNat v = x << k;
    if (strict ? v > y : v >= y) return k;
    ++k;
  }
}

}  // namespace

std::pair<IntervalSet, IntervalSet> atomless_split(const IntervalSet& c,
                                                   const PointUltrafilter& u) {
  if (!u.contains(c)) throw Error("atomless_split: set not in the ultrafilter");
  auto [l, r] = u.point_component(c);
  const Rational& p = u.point();

  // Both neighbors fitting forces 2^-k <= p-l and 2^-k < r-p, so k may start
  // at the least k satisfying those; below it the rule provably fails.
  BigNat gap_l = (p.num() << l.exp()) - l.num() * p.den();   // (p-l) * den*2^exp
  BigNat scale_l = p.den() << l.exp();
  BigNat gap_r = r.num() * p.den() - (p.num() << r.exp());
  BigNat scale_r = p.den() << r.exp();
  std::uint32_t k = std::max<std::uint32_t>(
      1, std::max(least_shift(gap_l, scale_l, false), least_shift(gap_r, scale_r, true)));

  for (;; ++k) {
    BigNat m = p.floor_scaled(k);
    if (m < 1 || m + 2 > (BigNat(1) << k)) continue;
    Dyadic left_l(m - 1, k), left_r(m, k);
    Dyadic right_l(m + 1, k), right_r(m + 2, k);
    if (left_l < l || r < right_r) continue;
    return {IntervalSet::interval(left_l, left_r), IntervalSet::interval(right_l, right_r)};
  }
}

}  // namespace bastep
