#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bastep/dyadic.hpp"

namespace bastep {

struct ParseError : Error {
  ParseError(std::size_t at, const std::string& what)
      : Error("parse error at byte " + std::to_string(at) + ": " + what), offset(at) {}
  std::size_t offset;
};

/// Canonical finite union of half-open dyadic intervals [l,r) inside [0,1).
/// Invariants: l < r per interval, intervals strictly ordered with gaps
/// between them (r_i < l_{i+1}), so equal point sets have identical
/// representations.
class IntervalSet {
 public:
  using Interval = std::pair<Dyadic, Dyadic>;

  IntervalSet() = default;  // empty set

  static IntervalSet full() { return interval(Dyadic::zero(), Dyadic::one()); }
  static IntervalSet interval(Dyadic l, Dyadic r);
  /// [m/2^k, (m+1)/2^k)
  static IntervalSet cell(const BigNat& m, std::uint32_t k);
  /// Canonicalizes an arbitrary list (sorts, merges overlaps and adjacency).
  static IntervalSet from_intervals(std::vector<Interval> intervals);

  bool empty() const { return ivs_.empty(); }
  std::size_t piece_count() const { return ivs_.size(); }
  const std::vector<Interval>& pieces() const { return ivs_; }
  const Dyadic& min() const;  // leftmost endpoint; throws on empty

  bool contains(const Dyadic& d) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

  std::string str() const;  // "[0/1,1/4)u[1/2,3/4)" or "{}"

 private:
  std::vector<Interval> ivs_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_diff(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_symdiff(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_complement(const IntervalSet& a);  // relative to [0,1)

bool is_empty(const IntervalSet& a);
bool is_subset(const IntervalSet& a, const IntervalSet& b);

/// Union of several sets (empty list gives the empty set).
IntervalSet set_union_all(const std::vector<IntervalSet>& parts);

/// The dyadic of least rank inside [l, r), smallest numerator on ties.
Dyadic min_rank_point(const Dyadic& l, const Dyadic& r);
/// The least-rank dyadic inside a nonempty set (taken from its first piece).
Dyadic min_rank_point(const IntervalSet& a);

/// Strict textual format; throws ParseError with a byte offset.
IntervalSet parse_interval_set(std::string_view text);

}  // namespace bastep
