#pragma once

#include "bastep/dyadic.hpp"
#include "bastep/interval_set.hpp"

namespace bastep {

/// The fixed bijection between naturals and dyadic rationals in [0,1):
/// enc(0) = 0, and for n = 2^(k-1) + t with 0 <= t < 2^(k-1),
/// enc(n) = (2t+1)/2^k. Level k enumerates the odd numerators over 2^k.
Dyadic encode(const BigNat& n);

/// Inverse of encode; rejects the value 1 (not in the range of encode).
BigNat decode(const Dyadic& d);

/// enc(n) ∈ a
bool contains_point(const IntervalSet& a, const BigNat& n);

}  // namespace bastep
