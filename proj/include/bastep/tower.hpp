#pragma once

#include <optional>
#include <span>

#include "bastep/chain.hpp"

namespace bastep {

enum class TriBool { False, True, Unresolved };

/// An element of the one-step extension algebra, kept as its defining pair:
/// (g ∩ e) ∪ (f ∖ g). Boolean operations act coordinatewise.
struct ExtSet {
  IntervalSet e, f;
};

ExtSet ext_complement(const ExtSet& a);
ExtSet ext_union(const ExtSet& a, const ExtSet& b);
ExtSet ext_intersect(const ExtSet& a, const ExtSet& b);

/// Candidate ultrafilter on the extension algebra for stacking a further
/// step: evaluate a second non-dyadic point through the chain. Membership of
/// (e,f) is decided where e and f agree at the point, or once the point sits
/// in a decided coordinate of the chain bottom; otherwise Unresolved. Where
/// it resolves, complement/meet/upward laws hold; a later chain extension
/// can turn Unresolved into a decision but never flips one.
class SecondPointStrategy {
 public:
  SecondPointStrategy(Rational second_point, const PointUltrafilter& base);

  TriBool membership(const ChainState& chain, const ExtSet& b) const;
  const Rational& point() const { return eval_.point(); }

 private:
  PointUltrafilter eval_;
};

/// One floor of the finite tower: depth 0 is the ground data, depth 1 the
/// fully verified single step. Deeper floors are experimental and exist only
/// as far as the strategy resolves.
struct TowerStage {
  std::size_t depth = 0;
  std::shared_ptr<ChainState> chain;  // the step this stage sits on (depth >= 1)
};

struct TowerProbe {
  bool aborted = false;
  std::string diagnostic;
  std::vector<TriBool> answers;
};

/// Dry-run the ultrafilter queries a root D_a extension over the extension
/// algebra would issue for each probe element; aborts the branch at the
/// first Unresolved answer.
TowerProbe probe_next_stage(const TowerStage& stage, const SecondPointStrategy& strategy,
                            std::span<const ExtSet> probes);

}  // namespace bastep
