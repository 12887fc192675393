#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bastep/extenders.hpp"

namespace bastep {

/// A descending chain of conditions rooted at (∅,∅), grown on demand by
/// meeting requested dense sets. The chain plays the part of the generic
/// filter: any finite verification only ever consults finitely many dense
/// sets, and decided memberships never change because coordinates only grow.
///
/// Single logical writer: meeting mutates the chain, and membership queries
/// may trigger meets. Operations on one ChainState must be externally
/// serialized; certificates and returned sets are immutable.
class ChainState {
 public:
  struct Step {
    Certificate cert;
    std::size_t stage;  // index of the chain entry equal to cert.result
  };

  ChainState(PointUltrafilter u, IdealFamily X, FreeSeq C);
  static ChainState standard();

  const PointUltrafilter& ultrafilter() const { return u_; }
  const IdealFamily& family() const { return X_; }
  const FreeSeq& sequence() const { return C_; }

  std::size_t stages() const { return chain_.size(); }
  const Condition& stage(std::size_t i) const { return *chain_.at(i); }
  ConditionPtr stage_ptr(std::size_t i) const { return chain_.at(i); }
  const Condition& bottom() const { return *chain_.back(); }
  ConditionPtr bottom_ptr() const { return chain_.back(); }
  std::span<const Step> log() const { return log_; }

  /// Extends the bottom into the requested dense set. Idempotent: a repeated
  /// request returns the cached step without touching the chain.
  const Step& meet(const DenseRequest& req);

  /// Decides n by meeting E_n; the answer is read off that step's condition
  /// and never changes afterwards.
  bool g_contains(const BigNat& n);

  /// The gluing value of (e,f) when e △ f ∉ u: after covering e △ f, the
  /// element (g∩e) ∪ (f∖g) collapses to (e∩f) ∪ (p0∩(e∖f)) ∪ (p1∩(f∖e)),
  /// a plain member of the ground algebra. Returns nothing when e △ f ∈ u.
  std::optional<IntervalSet> try_normalize(const IntervalSet& e, const IntervalSet& f);

  /// Line-based key=value session format; replaying a saved session rebuilds
  /// the chain bit-exactly.
  void save_session(std::ostream& out) const;
  static ChainState replay_session(std::istream& in);

 private:
  PointUltrafilter u_;
  IdealFamily X_;
  FreeSeq C_;
  std::vector<ConditionPtr> chain_;
  std::vector<Step> log_;
  std::map<std::string, std::size_t> met_;  // request key -> log index
  std::map<BigNat, bool> g_cache_;
};

/// Read-only face of the generic set: membership queries drive the chain.
class GenericSet {
 public:
  explicit GenericSet(ChainState& chain) : chain_(&chain) {}
  bool contains(const BigNat& n) const { return chain_->g_contains(n); }
  ChainState& chain() const { return *chain_; }

 private:
  ChainState* chain_;
};

/// (g ∩ e) ∪ (f ∖ g): an element of the one-step extension algebra. Points
/// where e and f agree are decided without consulting g.
struct ExtElement {
  IntervalSet e, f;
  GenericSet g;

  bool member(const BigNat& n) const {
    Dyadic d = encode(n);
    bool in_e = e.contains(d);
    bool in_f = f.contains(d);
    if (in_e == in_f) return in_e;
    return g.contains(n) ? in_e : in_f;
  }
};

}  // namespace bastep
