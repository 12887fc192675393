#include "bastep/tower.hpp"

namespace bastep {

ExtSet ext_complement(const ExtSet& a) {
  return ExtSet{set_complement(a.e), set_complement(a.f)};
}

ExtSet ext_union(const ExtSet& a, const ExtSet& b) {
  return ExtSet{set_union(a.e, b.e), set_union(a.f, b.f)};
}

ExtSet ext_intersect(const ExtSet& a, const ExtSet& b) {
  return ExtSet{set_intersect(a.e, b.e), set_intersect(a.f, b.f)};
}

SecondPointStrategy::SecondPointStrategy(Rational second_point, const PointUltrafilter& base)
    : eval_(PointUltrafilter(std::move(second_point))) {
  if (eval_.point() == base.point())
    throw Error("second-point strategy: point coincides with the base ultrafilter's");
}

TriBool SecondPointStrategy::membership(const ChainState& chain, const ExtSet& b) const {
  bool in_e = eval_.contains(b.e);
  bool in_f = eval_.contains(b.f);
  if (in_e == in_f) return in_e ? TriBool::True : TriBool::False;
  const Condition& bottom = chain.bottom();
  if (eval_.contains(bottom.p0())) return in_e ? TriBool::True : TriBool::False;
  if (eval_.contains(bottom.p1())) return in_f ? TriBool::True : TriBool::False;
  return TriBool::Unresolved;
}

TowerProbe probe_next_stage(const TowerStage& stage, const SecondPointStrategy& strategy,
                            std::span<const ExtSet> probes) {
  TowerProbe result;
  if (stage.depth == 0 || !stage.chain) {
    result.aborted = true;
    result.diagnostic = "probe requires a completed step to stand on";
    return result;
  }
  for (std::size_t i = 0; i < probes.size(); ++i) {
    TriBool ans = strategy.membership(*stage.chain, probes[i]);
    result.answers.push_back(ans);
    if (ans == TriBool::Unresolved) {
      result.aborted = true;
      result.diagnostic = "unresolved ultrafilter membership for probe " + std::to_string(i) +
                          " (e=" + probes[i].e.str() + ", f=" + probes[i].f.str() + ")";
      return result;
    }
  }
  return result;
}

}  // namespace bastep
