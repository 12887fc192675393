#pragma once

#include "bastep/certificate.hpp"

namespace bastep {

/// Constructive density: each function maps any condition to one inside the
/// named dense set and certifies which defining clause holds. Results are
/// re-validated and the certificate re-checked before being returned.

/// D_a (a ∉ u): a ⊆ q0 ∪ q1 with both q0\a and q1\a nonempty.
Certificate extend_into_Da(ConditionPtr p, const IntervalSet& a, const PointUltrafilter& u);

/// E_i: the encoded point of i lands in q0 ∪ q1. The bare point is not an
/// element of an atomless algebra, so the condition absorbs the least-rank
/// dyadic cell around enc(i) that fits the free component and avoids u.
Certificate extend_into_Ei(ConditionPtr p, const BigNat& i, const PointUltrafilter& u);

/// D_{e,f}: one of
///   (1) q0 ∪ q1 ⊇ e △ f,
///   (2) some piece lies below q* joined with finitely many other pieces,
///   (3) q* ∪ a_q lies below finitely many pieces.
Certificate extend_into_Def(ConditionPtr p, const IntervalSet& e, const IntervalSet& f,
                            const PointUltrafilter& u, const IdealFamily& X);

/// E_{e,f}: one of
///   (1) q0 ∪ q1 ⊇ e △ f,
///   (2) q* ⊇ c_i \ c_j for some i < j,
///   (3) q* ∪ a_q ⊆ -c_i for some i,
///   (4) q* ⊇ -c_0.
Certificate extend_into_Eef(ConditionPtr p, const IntervalSet& e, const IntervalSet& f,
                            const PointUltrafilter& u, const FreeSeq& C);

/// Re-derives the certificate's claim from kernel operations only: result is
/// a valid condition, result ≤ input, and the recorded clause relation holds
/// with the recorded witnesses. `why` (optional) receives the first failure.
bool recheck_certificate(const Certificate& c, const PointUltrafilter& u, const IdealFamily& X,
                         const FreeSeq& C, std::string* why = nullptr);

Certificate apply_extender(ConditionPtr p, const DenseRequest& req, const PointUltrafilter& u,
                           const IdealFamily& X, const FreeSeq& C);

}  // namespace bastep
