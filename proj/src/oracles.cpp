#include "bastep/oracles.hpp"

namespace bastep {

nlohmann::json IdealOracleAnswer::to_json() const {
  if (kind == Cover) return {{"kind", "Cover"}, {"pieces", pieces}};
  return {{"kind", "Absorb"}, {"head", head}, {"rest", rest}};
}

nlohmann::json FreeOracleAnswer::to_json() const {
  switch (kind) {
    case Avoid:
      return {{"kind", "Avoid"}, {"i", i}};
    case Between:
      return {{"kind", "Between"}, {"i", i}, {"j", j}};
    default:
      return {{"kind", "CoversTop"}};
  }
}

IdealFamily::IdealFamily(std::string id, PieceFn piece, AnswerFn answer)
    : id_(std::move(id)), piece_(std::move(piece)), answer_(std::move(answer)) {}

IdealOracleAnswer IdealFamily::answer(const IntervalSet& a) const {
  if (!answer_)
    throw OracleError("ideal oracle: family '" + id_ + "' has no answer strategy");
  return answer_(a);
}

FreeSeq::FreeSeq(std::string id, TermFn term, AnswerFn answer)
    : id_(std::move(id)), term_(std::move(term)), answer_(std::move(answer)) {}

FreeOracleAnswer FreeSeq::answer(const IntervalSet& a) const {
  if (!answer_)
    throw OracleError("free oracle: sequence '" + id_ + "' has no answer strategy");
  return answer_(a);
}

namespace {

IntervalSet annulus(std::uint32_t n) {
  return IntervalSet::interval(Dyadic(1, n + 1), Dyadic(1, n));
}

IntervalSet initial_segment(std::uint32_t i) {
  return IntervalSet::interval(Dyadic::zero(), Dyadic(1, i + 1));
}

// If a stays away from 0, only finitely many annuli meet it: everything of
// a sits above its least endpoint. Otherwise a contains an initial segment
// [0,δ), which swallows every annulus below δ.
IdealOracleAnswer canonical_ideal_answer(const IntervalSet& a) {
  IdealOracleAnswer ans;
  if (a.empty() || !a.min().is_zero()) {
    ans.kind = IdealOracleAnswer::Cover;
    if (!a.empty()) {
      const Dyadic& low = a.min();
      for (std::uint32_t n = 0;; ++n) {
        if (!is_empty(set_intersect(a, annulus(n)))) ans.pieces.push_back(n);
        if (!(low < Dyadic(1, n + 1))) break;  // 2^-(n+1) <= min(a): done
      }
    }
    return ans;
  }
  ans.kind = IdealOracleAnswer::Absorb;
  for (std::uint32_t k = 0;; ++k) {
    if (is_subset(annulus(k), a)) {
      ans.head = k;
      return ans;
    }
  }
}

FreeOracleAnswer canonical_free_answer(const IntervalSet& a) {
  FreeOracleAnswer ans;
  if (a.empty() || !a.min().is_zero()) {
    ans.kind = FreeOracleAnswer::Avoid;
    std::uint32_t i = 0;
    if (!a.empty())
      while (a.min() < Dyadic(1, i + 1)) ++i;  // least i with c_i ∩ a = ∅
    ans.i = i;
    return ans;
  }
  ans.kind = FreeOracleAnswer::Between;
  for (std::uint32_t i = 0;; ++i) {
    IntervalSet ring = set_diff(initial_segment(i), initial_segment(i + 1));
    if (is_subset(ring, a)) {
      ans.i = i;
      ans.j = i + 1;
      return ans;
    }
  }
}

}  // namespace

IdealFamily IdealFamily::canonical() {
  return IdealFamily("dyadic-annuli", annulus, canonical_ideal_answer);
}

FreeSeq FreeSeq::canonical() {
  return FreeSeq("shrinking-initials", initial_segment, canonical_free_answer);
}

bool ideal_answer_holds(const IntervalSet& a, const IdealFamily& X,
                        const IdealOracleAnswer& ans) {
  if (ans.kind == IdealOracleAnswer::Cover) {
    IntervalSet cover;
    for (auto n : ans.pieces) cover = set_union(cover, X.piece(n));
    return is_subset(a, cover);
  }
  IntervalSet bound = a;
  for (auto n : ans.rest) bound = set_union(bound, X.piece(n));
  return is_subset(X.piece(ans.head), bound);
}

bool free_answer_holds(const IntervalSet& a, const FreeSeq& C, const FreeOracleAnswer& ans) {
  switch (ans.kind) {
    case FreeOracleAnswer::Avoid:
      return is_empty(set_intersect(a, C.term(ans.i)));
    case FreeOracleAnswer::Between:
      return ans.i < ans.j && is_subset(set_diff(C.term(ans.i), C.term(ans.j)), a);
    default:
      return is_subset(set_complement(C.term(0)), a);
  }
}

IdealOracleAnswer ideal_oracle(const IntervalSet& a, const IdealFamily& X) {
  IdealOracleAnswer ans = X.answer(a);
  if (!ideal_answer_holds(a, X, ans))
    throw OracleError("ideal oracle: unsound answer from family '" + X.id() + "' on " + a.str());
  return ans;
}

FreeOracleAnswer free_oracle(const IntervalSet& a, const FreeSeq& C) {
  FreeOracleAnswer ans = C.answer(a);
  if (!free_answer_holds(a, C, ans))
    throw OracleError("free oracle: unsound answer from sequence '" + C.id() + "' on " + a.str());
  return ans;
}

}  // namespace bastep
