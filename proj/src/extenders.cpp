#include "bastep/extenders.hpp"

#include <algorithm>

namespace bastep {

namespace {

IntervalSet p_star_of(const Condition& q, const IntervalSet& e, const IntervalSet& f) {
  return set_union(set_intersect(e, q.p0()), set_intersect(f, q.p1()));
}

IntervalSet free_region(const Condition& q) {
  return set_complement(set_union(q.p0(), q.p1()));
}

void finalize(Certificate& c, const PointUltrafilter& u, const IdealFamily& X,
              const FreeSeq& C) {
  std::string why;
  if (!recheck_certificate(c, u, X, C, &why))
    throw Error("extender produced an invalid certificate (" + why + ") for " +
                c.request.key());
}

std::vector<std::uint32_t> merged_indices(std::vector<std::uint32_t> a,
                                          const std::vector<std::uint32_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

Certificate extend_into_Da(ConditionPtr p, const IntervalSet& a, const PointUltrafilter& u) {
  if (u.contains(a)) throw Error("extend_into_Da: a must avoid the ultrafilter");
  Certificate c;
  c.dense_set = DenseTag::Da;
  c.request = DenseRequest::da(a);
  c.input = p;

  IntervalSet taken = set_union(p->p0(), p->p1());
  if (is_subset(a, taken) && !is_empty(set_diff(p->p0(), a)) &&
      !is_empty(set_diff(p->p1(), a))) {
    c.result = p;  // already inside D_a
  } else {
    IntervalSet blocked = set_union(taken, a);
    auto [x0, x1] = atomless_split(set_complement(blocked), u);
    IntervalSet q0 = set_union(p->p0(), x0);
    IntervalSet q1 = set_union(set_union(p->p1(), x1), set_diff(a, p->p0()));
    c.added0 = x0;
    c.added1 = x1;
    c.result = std::make_shared<const Condition>(std::move(q0), std::move(q1), u);
  }
  c.w0 = min_rank_point(set_diff(c.result->p0(), a));
  c.w1 = min_rank_point(set_diff(c.result->p1(), a));
  finalize(c, u, IdealFamily::canonical(), FreeSeq::canonical());
  return c;
}

Certificate extend_into_Ei(ConditionPtr p, const BigNat& i, const PointUltrafilter& u) {
  Certificate c;
  c.dense_set = DenseTag::Ei;
  c.request = DenseRequest::ei(i);
  c.input = p;

  Dyadic d = encode(i);
  if (p->p0().contains(d) || p->p1().contains(d)) {
    c.result = p;  // already decided
  } else {
    IntervalSet open = free_region(*p);
    // The piece of the free region holding d.
    IntervalSet::Interval comp;
    for (const auto& iv : open.pieces())
      if (!(d < iv.first) && d < iv.second) {
        comp = iv;
        break;
      }
    for (std::uint32_t k = 0;; ++k) {
      BigNat m = k >= d.exp() ? BigNat(d.num() << (k - d.exp())) : BigNat(d.num() >> (d.exp() - k));
      IntervalSet cell = IntervalSet::cell(m, k);
      const auto& [cl, cr] = cell.pieces().front();
      if (!(cl < comp.first) && !(comp.second < cr) && !u.contains(cell)) {
        c.added0 = cell;
        c.result = std::make_shared<const Condition>(set_union(p->p0(), cell), p->p1(), u);
        break;
      }
    }
  }
  finalize(c, u, IdealFamily::canonical(), FreeSeq::canonical());
  return c;
}

namespace {

// Common trunk of the two (e,f) extenders, covering the branch where one
// difference side is in u. `mirror` swaps the roles: the coordinate whose
// intersection with {e,f} must stay fixed takes the neutral additions, the
// other one takes the additions that must land in q*.
struct EfBranch {
  ConditionPtr q;           // after the star extension
  IntervalSet q_star;       // relative to the original (e,f)
  IntervalSet a_q;
  bool mirror = false;
};

EfBranch enter_difference_branch(const ConditionPtr& p, const IntervalSet& e,
                                 const IntervalSet& f, const PointUltrafilter& u,
                                 bool mirror) {
  EfBranch b;
  b.mirror = mirror;
  IntervalSet side = mirror ? set_diff(f, e) : set_diff(e, f);
  b.q = std::make_shared<const Condition>(star_extend(*p, set_complement(side), u));
  b.q_star = p_star_of(*b.q, e, f);
  b.a_q = free_region(*b.q);  // now inside the chosen difference side
  return b;
}

// Add `keep` to the coordinate that does not feed q* (q* stays put), or
// `land` to the one that does (the addition shows up in q*).
ConditionPtr with_neutral_addition(const EfBranch& b, const IntervalSet& add,
                                   const PointUltrafilter& u) {
  if (!b.mirror)
    return std::make_shared<const Condition>(b.q->p0(), set_union(b.q->p1(), add), u);
  return std::make_shared<const Condition>(set_union(b.q->p0(), add), b.q->p1(), u);
}

ConditionPtr with_landing_addition(const EfBranch& b, const IntervalSet& add,
                                   const PointUltrafilter& u) {
  if (!b.mirror)
    return std::make_shared<const Condition>(set_union(b.q->p0(), add), b.q->p1(), u);
  return std::make_shared<const Condition>(b.q->p0(), set_union(b.q->p1(), add), u);
}

}  // namespace

Certificate extend_into_Def(ConditionPtr p, const IntervalSet& e, const IntervalSet& f,
                            const PointUltrafilter& u, const IdealFamily& X) {
  Certificate c;
  c.dense_set = DenseTag::Def;
  c.request = DenseRequest::def(e, f);
  c.input = p;

  DerivedParts dp = derived_parts(*p, e, f);
  if (!u.contains(set_symdiff(dp.e_p, dp.f_p))) {
    // e △ f avoids u: cover it outright.
    c.clause = 1;
    c.result = std::make_shared<const Condition>(star_extend(*p, set_symdiff(e, f), u));
    finalize(c, u, X, FreeSeq::canonical());
    return c;
  }

  bool mirror = !u.contains(set_diff(dp.e_p, dp.f_p));
  c.mirrored = mirror;
  EfBranch b = enter_difference_branch(p, e, f, u, mirror);

  IdealOracleAnswer first = ideal_oracle(b.q_star, X);
  if (first.kind == IdealOracleAnswer::Absorb) {
    c.clause = 2;
    c.head = first.head;
    c.rest = first.rest;
    c.result = b.q;
    finalize(c, u, X, FreeSeq::canonical());
    return c;
  }

  IdealOracleAnswer second = ideal_oracle(b.a_q, X);
  if (second.kind == IdealOracleAnswer::Cover) {
    c.clause = 3;
    c.cover = merged_indices(first.pieces, second.pieces);
    c.result = b.q;
    finalize(c, u, X, FreeSeq::canonical());
    return c;
  }

  IntervalSet y0 = X.piece(second.head);
  IntervalSet inside = set_intersect(b.a_q, y0);
  if (u.contains(inside)) {
    // Push the rest of a_q out of play; q* is untouched and a_r ⊆ y0.
    c.clause = 3;
    c.cover = merged_indices(first.pieces, {second.head});
    c.result = with_neutral_addition(b, set_diff(b.a_q, y0), u);
  } else {
    // Absorb a_q ∩ y0 into the q*-side, so y0 sinks below q* and the rest.
    c.clause = 2;
    c.head = second.head;
    c.rest = second.rest;
    c.result = with_landing_addition(b, inside, u);
  }
  finalize(c, u, X, FreeSeq::canonical());
  return c;
}

Certificate extend_into_Eef(ConditionPtr p, const IntervalSet& e, const IntervalSet& f,
                            const PointUltrafilter& u, const FreeSeq& C) {
  Certificate c;
  c.dense_set = DenseTag::Eef;
  c.request = DenseRequest::eef(e, f);
  c.input = p;

  DerivedParts dp = derived_parts(*p, e, f);
  if (!u.contains(set_symdiff(dp.e_p, dp.f_p))) {
    c.clause = 1;
    c.result = std::make_shared<const Condition>(star_extend(*p, set_symdiff(e, f), u));
    finalize(c, u, IdealFamily::canonical(), C);
    return c;
  }

  bool mirror = !u.contains(set_diff(dp.e_p, dp.f_p));
  c.mirrored = mirror;
  EfBranch b = enter_difference_branch(p, e, f, u, mirror);

  FreeOracleAnswer first = free_oracle(b.q_star, C);
  if (first.kind == FreeOracleAnswer::Between) {
    c.clause = 2;
    c.idx_i = first.i;
    c.idx_j = first.j;
    c.result = b.q;
    finalize(c, u, IdealFamily::canonical(), C);
    return c;
  }
  if (first.kind == FreeOracleAnswer::CoversTop) {
    c.clause = 4;
    c.result = b.q;
    finalize(c, u, IdealFamily::canonical(), C);
    return c;
  }

  std::uint32_t avoid_i = first.i;
  FreeOracleAnswer second = free_oracle(b.a_q, C);
  switch (second.kind) {
    case FreeOracleAnswer::Avoid:
      c.clause = 3;
      c.idx_i = std::max(avoid_i, second.i);
      c.result = b.q;
      break;
    case FreeOracleAnswer::Between: {
      IntervalSet ring = set_diff(C.term(second.i), C.term(second.j));
      if (u.contains(ring)) {
        // Shut out everything off the ring; a_r ⊆ ring ⊆ -c_j and q* is kept.
        IntervalSet off = mirror ? set_intersect(set_complement(b.q->p1()), set_complement(ring))
                                 : set_intersect(set_complement(b.q->p0()), set_complement(ring));
        c.clause = 3;
        c.idx_i = std::max(avoid_i, second.j);
        c.result = with_neutral_addition(b, off, u);
      } else {
        // The ring joins the q*-side whole.
        c.clause = 2;
        c.idx_i = second.i;
        c.idx_j = second.j;
        c.result = with_landing_addition(b, ring, u);
      }
      break;
    }
    default: {  // a_q covers the top
      IntervalSet c0 = C.term(0);
      IntervalSet inside = set_intersect(b.a_q, c0);
      if (!u.contains(inside)) {
        c.clause = 3;
        c.idx_i = avoid_i;
        c.result = with_neutral_addition(b, inside, u);
      } else {
        c.clause = 4;
        c.result = with_landing_addition(b, set_diff(b.a_q, c0), u);
      }
    }
  }
  finalize(c, u, IdealFamily::canonical(), C);
  return c;
}

bool recheck_certificate(const Certificate& c, const PointUltrafilter& u, const IdealFamily& X,
                         const FreeSeq& C, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  if (!c.input || !c.result) return fail("missing conditions");
  const Condition& q = *c.result;
  try {
    Condition revalidated(q.p0(), q.p1(), u);
  } catch (const Error& e) {
    return fail("result is not a valid condition");
  }
  if (!leq(q, *c.input)) return fail("result does not extend the input");

  switch (c.dense_set) {
    case DenseTag::Da: {
      const IntervalSet& a = c.request.a;
      if (!is_subset(a, set_union(q.p0(), q.p1()))) return fail("a not covered");
      IntervalSet d0 = set_diff(q.p0(), a), d1 = set_diff(q.p1(), a);
      if (is_empty(d0) || is_empty(d1)) return fail("no overhang on one side");
      if (c.w0 && !d0.contains(*c.w0)) return fail("w0 not a witness");
      if (c.w1 && !d1.contains(*c.w1)) return fail("w1 not a witness");
      return true;
    }
    case DenseTag::Ei:
      if (!set_union(q.p0(), q.p1()).contains(encode(c.request.i)))
        return fail("point not decided");
      return true;
    case DenseTag::Def: {
      IntervalSet q_star = p_star_of(q, c.request.e, c.request.f);
      switch (c.clause) {
        case 1:
          if (!is_subset(set_symdiff(c.request.e, c.request.f), set_union(q.p0(), q.p1())))
            return fail("e△f not covered");
          return true;
        case 2: {
          if (!c.head) return fail("clause 2 without head");
          IntervalSet bound = q_star;
          for (auto n : c.rest) bound = set_union(bound, X.piece(n));
          if (!is_subset(X.piece(*c.head), bound)) return fail("head piece not absorbed");
          return true;
        }
        case 3: {
          IntervalSet covered;
          for (auto n : c.cover) covered = set_union(covered, X.piece(n));
          if (!is_subset(set_union(q_star, free_region(q)), covered))
            return fail("q* ∪ a_q not covered by pieces");
          return true;
        }
        default:
          return fail("bad clause");
      }
    }
    case DenseTag::Eef: {
      IntervalSet q_star = p_star_of(q, c.request.e, c.request.f);
      switch (c.clause) {
        case 1:
          if (!is_subset(set_symdiff(c.request.e, c.request.f), set_union(q.p0(), q.p1())))
            return fail("e△f not covered");
          return true;
        case 2:
          if (!c.idx_i || !c.idx_j || !(*c.idx_i < *c.idx_j)) return fail("bad indices");
          if (!is_subset(set_diff(C.term(*c.idx_i), C.term(*c.idx_j)), q_star))
            return fail("ring not inside q*");
          return true;
        case 3:
          if (!c.idx_i) return fail("clause 3 without index");
          if (!is_subset(set_union(q_star, free_region(q)),
                         set_complement(C.term(*c.idx_i))))
            return fail("q* ∪ a_q meets c_i");
          return true;
        case 4:
          if (!is_subset(set_complement(C.term(0)), q_star)) return fail("top not inside q*");
          return true;
        default:
          return fail("bad clause");
      }
    }
  }
  return fail("unknown dense set");
}

Certificate apply_extender(ConditionPtr p, const DenseRequest& req, const PointUltrafilter& u,
                           const IdealFamily& X, const FreeSeq& C) {
  switch (req.tag) {
    case DenseTag::Da: return extend_into_Da(std::move(p), req.a, u);
    case DenseTag::Ei: return extend_into_Ei(std::move(p), req.i, u);
    case DenseTag::Def: return extend_into_Def(std::move(p), req.e, req.f, u, X);
    default: return extend_into_Eef(std::move(p), req.e, req.f, u, C);
  }
}

}  // namespace bastep
