#pragma once

#include <cstdint>
#include <iosfwd>

#include "bastep/chain.hpp"
#include "bastep/random.hpp"

namespace bastep {

enum class Claim { NotInA, UltraDestroyed, IdealPreserved, FreePreserved, NotAtom };

std::string_view claim_name(Claim c);

/// A checked conclusion about the extension step. Witnesses are explicit
/// (points of ω, piece indexes, the certified stage condition) and the
/// A-level inclusions re-derive from kernel operations alone; facts touching
/// the generic set are pinned by structural bounds checked over a prefix
/// window at creation time.
struct VerdictCertificate {
  Claim claim = Claim::NotInA;
  bool verified = false;
  bool inconclusive = false;  // NotAtom only: bounded search ran dry
  std::string note;

  std::size_t stage = 0;
  ConditionPtr at;  // condition at that stage

  IntervalSet a, e, f;
  bool a_in_u = false;

  int clause = 0;
  bool mirrored = false;
  std::optional<IntervalSet> normalized;      // clause 1: the gluing value
  std::optional<IdealOracleAnswer> ideal_ans; // clause 1 verdicts
  std::optional<FreeOracleAnswer> free_ans;
  std::vector<std::uint32_t> pieces;          // ideal clause 3
  std::optional<std::uint32_t> head;          // ideal clause 2
  std::vector<std::uint32_t> rest;
  std::optional<std::uint32_t> idx_i, idx_j;  // free clauses 2/3

  BigNat n0, n1;
  Dyadic d0, d1;
  bool n0_in_g = false, n1_in_g = false;
  IntervalSet evidence0, evidence1;  // decided cells certifying the g-sides
  IntervalSet separator;             // NotAtom
  std::uint64_t bound = 0;
  std::uint32_t prefix = 0;
  std::uint32_t window_mismatches = 0;

  nlohmann::json to_json() const;
};

/// n with n ∈ g △ a: for a ∉ u the D_a overhang gives n ∈ g \ a, for a ∈ u
/// the D_{-a} overhang gives n ∈ a \ g. Establishes g ≠ a.
VerdictCertificate verify_g_differs(ChainState& chain, const IntervalSet& a);

/// For a ∉ u: n0 ∈ g \ a and n1 ∈ (-g) \ a, so neither g ≤ a nor -g ≤ a;
/// a cannot witness that u still generates an ultrafilter over g.
VerdictCertificate verify_ultra_destroyed(ChainState& chain, const IntervalSet& a);

/// The family together with b = (g∩e) ∪ (f∖g) is not ideal-independent:
/// emits the witnessing inclusion for the certified D_{e,f} clause and checks
/// the structural bounds p* ⊆ b ⊆ p* ∪ a_p over the prefix window.
VerdictCertificate verify_ideal_preserved(ChainState& chain, const IntervalSet& e,
                                          const IntervalSet& f, std::uint32_t prefix = 2048);

/// The sequence does not stay free after appending b: emits the vanished
/// split product for the certified E_{e,f} clause.
VerdictCertificate verify_free_preserved(ChainState& chain, const IntervalSet& e,
                                         const IntervalSet& f, std::uint32_t prefix = 2048);

/// Two members of b separated by a ground-algebra cell, found among indexes
/// up to `bound`; Inconclusive when the bounded search finds fewer than two.
VerdictCertificate verify_not_atom(ChainState& chain, const IntervalSet& e,
                                   const IntervalSet& f, std::uint64_t bound = 1u << 16);

/// Kernel-only re-check of a verdict's explicit witnesses and inclusions.
bool recheck_verdict(const VerdictCertificate& v, const PointUltrafilter& u,
                     const IdealFamily& X, const FreeSeq& C, std::string* why = nullptr);

struct StepReport {
  nlohmann::json header;
  std::vector<VerdictCertificate> verdicts;
  nlohmann::json summary;

  std::uint32_t failed = 0;
  std::uint32_t inconclusive = 0;

  int exit_code() const { return failed == 0 ? 0 : 1; }
  void write(std::ostream& out) const;  // JSON lines, one object per line
};

/// One chain; per sample: destruction and newness on random sets, both
/// preservation verdicts and an atom check on random extension elements.
/// Deterministic under (seed, samples, prefix, chain point).
StepReport run_step_demo(ChainState& chain, std::uint64_t seed, std::uint32_t samples,
                         std::uint32_t prefix = 2048);

}  // namespace bastep
