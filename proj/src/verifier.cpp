#include "bastep/verifier.hpp"

#include <ostream>

namespace bastep {

std::string_view claim_name(Claim c) {
  switch (c) {
    case Claim::NotInA: return "NotInA";
    case Claim::UltraDestroyed: return "UltraDestroyed";
    case Claim::IdealPreserved: return "IdealPreserved";
    case Claim::FreePreserved: return "FreePreserved";
    default: return "NotAtom";
  }
}

nlohmann::json VerdictCertificate::to_json() const {
  nlohmann::json in;
  switch (claim) {
    case Claim::NotInA:
      in["a"] = a.str();
      in["a_in_u"] = a_in_u;
      break;
    case Claim::UltraDestroyed:
      in["a"] = a.str();
      break;
    default:
      in["e"] = e.str();
      in["f"] = f.str();
  }

  nlohmann::json w;
  auto put_point = [&](const char* np, const char* dp, const BigNat& n, const Dyadic& d) {
    w[np] = n.str();
    w[dp] = d.str();
  };
  switch (claim) {
    case Claim::NotInA:
      put_point("n0", "d0", n0, d0);
      w["in_g"] = n0_in_g;
      break;
    case Claim::UltraDestroyed:
      put_point("n0", "d0", n0, d0);
      put_point("n1", "d1", n1, d1);
      break;
    case Claim::IdealPreserved:
      if (normalized) w["b"] = normalized->str();
      if (ideal_ans) w["answer"] = ideal_ans->to_json();
      if (head) w["head"] = *head;
      if (head) w["rest"] = rest;
      if (clause == 3) w["pieces"] = pieces;
      w["prefix"] = prefix;
      break;
    case Claim::FreePreserved: {
      if (normalized) w["b"] = normalized->str();
      if (free_ans) w["answer"] = free_ans->to_json();
      nlohmann::json prod;
      prod["pos"] = nlohmann::json::array();
      prod["neg"] = nlohmann::json::array();
      if (idx_i) prod["pos"].push_back(*idx_i);
      if (idx_j) prod["neg"].push_back(*idx_j);
      if (clause == 4) prod["neg"].push_back(0);
      prod["b"] = (clause == 3 || (free_ans && free_ans->kind == FreeOracleAnswer::Avoid))
                      ? "pos"
                      : "neg";
      w["product"] = std::move(prod);
      w["prefix"] = prefix;
      break;
    }
    case Claim::NotAtom:
      if (!inconclusive) {
        put_point("n0", "d0", n0, d0);
        put_point("n1", "d1", n1, d1);
        w["separator"] = separator.str();
      }
      w["bound"] = bound;
      break;
  }

  nlohmann::json out{{"claim", std::string(claim_name(claim))},
                     {"verified", verified},
                     {"stage", stage},
                     {"inputs", std::move(in)},
                     {"witnesses", std::move(w)}};
  if (clause > 0) out["clause"] = clause;
  if (mirrored) out["mirrored"] = true;
  if (inconclusive) out["inconclusive"] = true;
  if (!note.empty()) out["note"] = note;
  if (window_mismatches > 0) out["window_mismatches"] = window_mismatches;
  return out;
}

namespace {

IntervalSet piece_around(const IntervalSet& s, const Dyadic& d) {
  for (const auto& [l, r] : s.pieces())
    if (!(d < l) && d < r) return IntervalSet::interval(l, r);
  return IntervalSet();
}

// p* ⊆ b ⊆ p* ∪ a_p and b ∩ (p0 ∪ p1) = p*, verified pointwise on the window.
std::uint32_t structural_mismatches(ChainState& chain, const Condition& at,
                                    const IntervalSet& e, const IntervalSet& f,
                                    std::uint32_t prefix) {
  DerivedParts dp = derived_parts(at, e, f);
  IntervalSet taken = set_union(at.p0(), at.p1());
  IntervalSet upper = set_union(dp.p_star, dp.a_p);
  ExtElement b{e, f, GenericSet(chain)};
  std::uint32_t bad = 0;
  for (std::uint32_t n = 0; n <= prefix; ++n) {
    Dyadic d = encode(n);
    bool bm = b.member(n);
    if (dp.p_star.contains(d) && !bm) ++bad;
    if (bm && !upper.contains(d)) ++bad;
    if (taken.contains(d) && bm != dp.p_star.contains(d)) ++bad;
  }
  return bad;
}

}  // namespace

VerdictCertificate verify_g_differs(ChainState& chain, const IntervalSet& a) {
  VerdictCertificate v;
  v.claim = Claim::NotInA;
  v.a = a;
  v.a_in_u = chain.ultrafilter().contains(a);

  const ChainState::Step& step =
      chain.meet(DenseRequest::da(v.a_in_u ? set_complement(a) : a));
  v.stage = step.stage;
  v.at = step.cert.result;

  // a ∉ u: the p0 overhang over a gives n ∈ g \ a (p0 ⊆ g).
  // a ∈ u: the p1 overhang over -a is p1 ∩ a, giving n ∈ a \ g (p1 ⊆ -g).
  IntervalSet target = v.a_in_u ? set_intersect(v.at->p1(), a) : set_diff(v.at->p0(), a);
  v.d0 = min_rank_point(target);
  v.n0 = decode(v.d0);
  v.n0_in_g = !v.a_in_u;
  bool g_agrees = chain.g_contains(v.n0) == v.n0_in_g;
  bool differs = v.a_in_u ? (a.contains(v.d0) && !chain.g_contains(v.n0))
                          : (!a.contains(v.d0) && chain.g_contains(v.n0));
  v.verified = g_agrees && differs;
  return v;
}

VerdictCertificate verify_ultra_destroyed(ChainState& chain, const IntervalSet& a) {
  if (chain.ultrafilter().contains(a))
    throw Error("verify_ultra_destroyed: a must avoid the ultrafilter");
  VerdictCertificate v;
  v.claim = Claim::UltraDestroyed;
  v.a = a;

  const ChainState::Step& step = chain.meet(DenseRequest::da(a));
  v.stage = step.stage;
  v.at = step.cert.result;

  v.d0 = min_rank_point(set_diff(v.at->p0(), a));
  v.d1 = min_rank_point(set_diff(v.at->p1(), a));
  v.n0 = decode(v.d0);
  v.n1 = decode(v.d1);
  v.n0_in_g = true;
  v.verified = chain.g_contains(v.n0) && !chain.g_contains(v.n1) && !a.contains(v.d0) &&
               !a.contains(v.d1);
  return v;
}

VerdictCertificate verify_ideal_preserved(ChainState& chain, const IntervalSet& e,
                                          const IntervalSet& f, std::uint32_t prefix) {
  VerdictCertificate v;
  v.claim = Claim::IdealPreserved;
  v.e = e;
  v.f = f;
  v.prefix = prefix;

  const ChainState::Step& step = chain.meet(DenseRequest::def(e, f));
  const Certificate& cert = step.cert;
  v.stage = step.stage;
  v.at = cert.result;
  v.clause = cert.clause;
  v.mirrored = cert.mirrored;

  const IdealFamily& X = chain.family();
  DerivedParts dp = derived_parts(*v.at, e, f);
  ExtElement b{e, f, GenericSet(chain)};
  bool exact = false;
  std::uint32_t extra_bad = 0;

  switch (cert.clause) {
    case 1: {
      v.normalized = chain.try_normalize(e, f);
      exact = v.normalized.has_value();
      if (exact) {
        v.ideal_ans = ideal_oracle(*v.normalized, X);  // verified at the boundary
        for (std::uint32_t n = 0; n <= prefix; ++n)
          if (v.normalized->contains(encode(n)) != b.member(n)) ++extra_bad;
      }
      break;
    }
    case 2: {
      v.head = cert.head;
      v.rest = cert.rest;
      IntervalSet others;
      for (auto k : cert.rest) others = set_union(others, X.piece(k));
      exact = is_subset(X.piece(*cert.head), set_union(dp.p_star, others));
      // Conclusion on the window: the head piece sinks below b and the rest.
      IntervalSet headp = X.piece(*cert.head);
      for (std::uint32_t n = 0; n <= prefix; ++n) {
        Dyadic d = encode(n);
        if (headp.contains(d) && !b.member(n) && !others.contains(d)) ++extra_bad;
      }
      break;
    }
    case 3: {
      v.pieces = cert.cover;
      IntervalSet covered;
      for (auto k : cert.cover) covered = set_union(covered, X.piece(k));
      exact = is_subset(set_union(dp.p_star, dp.a_p), covered);
      for (std::uint32_t n = 0; n <= prefix; ++n)
        if (b.member(n) && !covered.contains(encode(n))) ++extra_bad;
      break;
    }
  }

  v.window_mismatches = structural_mismatches(chain, *v.at, e, f, prefix) + extra_bad;
  v.verified = exact && v.window_mismatches == 0;
  return v;
}

VerdictCertificate verify_free_preserved(ChainState& chain, const IntervalSet& e,
                                         const IntervalSet& f, std::uint32_t prefix) {
  VerdictCertificate v;
  v.claim = Claim::FreePreserved;
  v.e = e;
  v.f = f;
  v.prefix = prefix;

  const ChainState::Step& step = chain.meet(DenseRequest::eef(e, f));
  const Certificate& cert = step.cert;
  v.stage = step.stage;
  v.at = cert.result;
  v.clause = cert.clause;
  v.mirrored = cert.mirrored;

  const FreeSeq& C = chain.sequence();
  DerivedParts dp = derived_parts(*v.at, e, f);
  ExtElement b{e, f, GenericSet(chain)};
  bool exact = false;
  std::uint32_t extra_bad = 0;

  switch (cert.clause) {
    case 1: {
      v.normalized = chain.try_normalize(e, f);
      exact = v.normalized.has_value();
      if (exact) {
        v.free_ans = free_oracle(*v.normalized, C);
        // The violated product is exact here since b is a ground element.
        switch (v.free_ans->kind) {
          case FreeOracleAnswer::Avoid:
            v.idx_i = v.free_ans->i;
            exact = is_empty(set_intersect(C.term(v.free_ans->i), *v.normalized));
            break;
          case FreeOracleAnswer::Between:
            v.idx_i = v.free_ans->i;
            v.idx_j = v.free_ans->j;
            exact = is_empty(set_diff(set_diff(C.term(v.free_ans->i), C.term(v.free_ans->j)),
                                      *v.normalized));
            break;
          default:
            exact = is_empty(set_diff(set_complement(C.term(0)), *v.normalized));
        }
        for (std::uint32_t n = 0; n <= prefix; ++n)
          if (v.normalized->contains(encode(n)) != b.member(n)) ++extra_bad;
      }
      break;
    }
    case 2: {
      v.idx_i = cert.idx_i;
      v.idx_j = cert.idx_j;
      IntervalSet ring = set_diff(C.term(*cert.idx_i), C.term(*cert.idx_j));
      exact = is_subset(ring, dp.p_star);
      // c_i ∩ -c_j ∩ -b vanishes on the window.
      for (std::uint32_t n = 0; n <= prefix; ++n)
        if (ring.contains(encode(n)) && !b.member(n)) ++extra_bad;
      break;
    }
    case 3: {
      v.idx_i = cert.idx_i;
      IntervalSet ci = C.term(*cert.idx_i);
      exact = is_subset(set_union(dp.p_star, dp.a_p), set_complement(ci));
      for (std::uint32_t n = 0; n <= prefix; ++n)
        if (b.member(n) && ci.contains(encode(n))) ++extra_bad;
      break;
    }
    case 4: {
      IntervalSet top = set_complement(C.term(0));
      exact = is_subset(top, dp.p_star);
      for (std::uint32_t n = 0; n <= prefix; ++n)
        if (top.contains(encode(n)) && !b.member(n)) ++extra_bad;
      break;
    }
  }

  v.window_mismatches = structural_mismatches(chain, *v.at, e, f, prefix) + extra_bad;
  v.verified = exact && v.window_mismatches == 0;
  return v;
}

namespace {

struct MemberCandidate {
  BigNat n;
  Dyadic d;
  int region;  // 0: e∩f, 1: e\f, 2: f\e
};

void component_candidates(const IntervalSet::Interval& iv, const BigNat& bound, int region,
                          std::size_t cap, std::vector<MemberCandidate>& out) {
  std::size_t emitted = 0;
  auto push = [&](Dyadic d) {
    BigNat n = decode(d);
    if (n <= bound) {
      out.push_back(MemberCandidate{std::move(n), std::move(d), region});
      ++emitted;
    }
  };
  Dyadic first = min_rank_point(iv.first, iv.second);
  push(first);
  for (std::uint32_t j = first.exp() + 1; emitted < cap && j <= first.exp() + 4; ++j) {
    // Odd numerators of rank exactly j inside [l, r).
    const Dyadic& l = iv.first;
    BigNat m = (j >= l.exp()) ? BigNat(l.num() << (j - l.exp()))
                              : BigNat((l.num() + (BigNat(1) << (l.exp() - j)) - 1) >>
                                       (l.exp() - j));
    if ((m & 1) == 0) ++m;
    for (int step = 0; step < 2 && emitted < cap; ++step, m += 2) {
      Dyadic d(m, j);
      if (!(d < iv.second)) break;
      if (!(d < iv.first)) push(std::move(d));
    }
  }
}

std::vector<MemberCandidate> member_candidates(const IntervalSet& e, const IntervalSet& f,
                                               const BigNat& bound) {
  std::vector<MemberCandidate> out;
  IntervalSet regions[3] = {set_intersect(e, f), set_diff(e, f), set_diff(f, e)};
  for (int r = 0; r < 3; ++r)
    for (const auto& iv : regions[r].pieces()) {
      component_candidates(iv, bound, r, 6, out);
      if (out.size() > 96) return out;
    }
  return out;
}

}  // namespace

VerdictCertificate verify_not_atom(ChainState& chain, const IntervalSet& e,
                                   const IntervalSet& f, std::uint64_t bound) {
  VerdictCertificate v;
  v.claim = Claim::NotAtom;
  v.e = e;
  v.f = f;
  v.bound = bound;
  v.stage = chain.stages() - 1;
  v.at = chain.bottom_ptr();

  struct Member {
    BigNat n;
    Dyadic d;
    int region;
  };
  std::vector<Member> members;
  std::size_t queries = 0;
  for (MemberCandidate& cand : member_candidates(e, f, BigNat(bound))) {
    bool in = false;
    if (cand.region == 0) {
      in = true;
    } else if (queries < 48) {
      ++queries;
      bool g = chain.g_contains(cand.n);
      in = (cand.region == 1) ? g : !g;
    }
    if (in) {
      members.push_back(Member{std::move(cand.n), std::move(cand.d), cand.region});
      if (members.size() == 2) break;
    }
  }

  if (members.size() < 2) {
    v.inconclusive = true;
    v.note = "fewer than two members located below the bound";
    v.verified = false;
    return v;
  }

  v.n0 = members[0].n;
  v.d0 = members[0].d;
  v.n1 = members[1].n;
  v.d1 = members[1].d;
  v.n0_in_g = members[0].region != 2;
  v.n1_in_g = members[1].region != 2;
  if (members[0].region != 0)
    v.evidence0 = piece_around(members[0].region == 1 ? v.at->p0() : v.at->p1(), v.d0);
  if (members[1].region != 0)
    v.evidence1 = piece_around(members[1].region == 1 ? v.at->p0() : v.at->p1(), v.d1);

  // A cell around d0 one rank below both witnesses cannot hold d1 as well.
  std::uint32_t k = std::max(v.d0.exp(), v.d1.exp()) + 1;
  v.separator = IntervalSet::cell(BigNat(v.d0.num() << (k - v.d0.exp())), k);

  ExtElement b{e, f, GenericSet(chain)};
  v.verified = b.member(v.n0) && b.member(v.n1) && v.separator.contains(v.d0) &&
               !v.separator.contains(v.d1);
  return v;
}

bool recheck_verdict(const VerdictCertificate& v, const PointUltrafilter& u,
                     const IdealFamily& X, const FreeSeq& C, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  if (v.inconclusive) return true;  // nothing claimed
  if (!v.at) return fail("missing stage condition");
  const Condition& at = *v.at;
  try {
    Condition check(at.p0(), at.p1(), u);
  } catch (const Error&) {
    return fail("stage is not a valid condition");
  }

  switch (v.claim) {
    case Claim::NotInA: {
      if (encode(v.n0) != v.d0) return fail("point/index mismatch");
      if (v.a_in_u != u.contains(v.a)) return fail("side mismatch");
      if (v.a_in_u) return at.p1().contains(v.d0) && v.a.contains(v.d0)
                               ? true
                               : fail("witness not in p1 ∩ a");
      return at.p0().contains(v.d0) && !v.a.contains(v.d0) ? true
                                                            : fail("witness not in p0 \\ a");
    }
    case Claim::UltraDestroyed: {
      if (u.contains(v.a)) return fail("a in u");
      if (encode(v.n0) != v.d0 || encode(v.n1) != v.d1) return fail("point/index mismatch");
      if (!at.p0().contains(v.d0) || v.a.contains(v.d0)) return fail("n0 not in p0 \\ a");
      if (!at.p1().contains(v.d1) || v.a.contains(v.d1)) return fail("n1 not in p1 \\ a");
      if (!is_subset(v.a, set_union(at.p0(), at.p1()))) return fail("a not covered");
      return true;
    }
    case Claim::IdealPreserved: {
      DerivedParts dp = derived_parts(at, v.e, v.f);
      switch (v.clause) {
        case 1: {
          if (!v.normalized || !v.ideal_ans) return fail("clause 1 payload missing");
          if (!is_subset(set_symdiff(v.e, v.f), set_union(at.p0(), at.p1())))
            return fail("e△f not covered at stage");
          IntervalSet glue = set_union(
              set_intersect(v.e, v.f),
              set_union(set_intersect(at.p0(), set_diff(v.e, v.f)),
                        set_intersect(at.p1(), set_diff(v.f, v.e))));
          if (!(glue == *v.normalized)) return fail("gluing value mismatch");
          return ideal_answer_holds(*v.normalized, X, *v.ideal_ans)
                     ? true
                     : fail("oracle answer unsound");
        }
        case 2: {
          if (!v.head) return fail("clause 2 payload missing");
          IntervalSet bound = dp.p_star;
          for (auto k : v.rest) bound = set_union(bound, X.piece(k));
          return is_subset(X.piece(*v.head), bound) ? true : fail("head piece not absorbed");
        }
        case 3: {
          IntervalSet covered;
          for (auto k : v.pieces) covered = set_union(covered, X.piece(k));
          return is_subset(set_union(dp.p_star, dp.a_p), covered)
                     ? true
                     : fail("p* ∪ a_p not covered");
        }
      }
      return fail("bad clause");
    }
    case Claim::FreePreserved: {
      DerivedParts dp = derived_parts(at, v.e, v.f);
      switch (v.clause) {
        case 1: {
          if (!v.normalized || !v.free_ans) return fail("clause 1 payload missing");
          if (!is_subset(set_symdiff(v.e, v.f), set_union(at.p0(), at.p1())))
            return fail("e△f not covered at stage");
          IntervalSet glue = set_union(
              set_intersect(v.e, v.f),
              set_union(set_intersect(at.p0(), set_diff(v.e, v.f)),
                        set_intersect(at.p1(), set_diff(v.f, v.e))));
          if (!(glue == *v.normalized)) return fail("gluing value mismatch");
          return free_answer_holds(*v.normalized, C, *v.free_ans)
                     ? true
                     : fail("oracle answer unsound");
        }
        case 2:
          if (!v.idx_i || !v.idx_j) return fail("clause 2 payload missing");
          return is_subset(set_diff(C.term(*v.idx_i), C.term(*v.idx_j)), dp.p_star)
                     ? true
                     : fail("ring not inside p*");
        case 3:
          if (!v.idx_i) return fail("clause 3 payload missing");
          return is_subset(set_union(dp.p_star, dp.a_p), set_complement(C.term(*v.idx_i)))
                     ? true
                     : fail("p* ∪ a_p meets c_i");
        case 4:
          return is_subset(set_complement(C.term(0)), dp.p_star)
                     ? true
                     : fail("top not inside p*");
      }
      return fail("bad clause");
    }
    case Claim::NotAtom: {
      if (encode(v.n0) != v.d0 || encode(v.n1) != v.d1) return fail("point/index mismatch");
      if (v.n0 == v.n1) return fail("witnesses coincide");
      if (!v.separator.contains(v.d0) || v.separator.contains(v.d1))
        return fail("separator does not split the witnesses");
      IntervalSet both = set_intersect(v.e, v.f);
      auto side_ok = [&](const Dyadic& d, bool in_g, const IntervalSet& evidence) {
        if (both.contains(d)) return true;
        const IntervalSet& diff = in_g ? v.e : v.f;
        const IntervalSet& other = in_g ? v.f : v.e;
        if (!diff.contains(d) || other.contains(d)) return false;
        // The decided cell that pins this point's g-side.
        return !evidence.empty() && evidence.contains(d) &&
               is_subset(evidence, in_g ? at.p0() : at.p1());
      };
      if (!side_ok(v.d0, v.n0_in_g, v.evidence0)) return fail("n0 membership unsupported");
      if (!side_ok(v.d1, v.n1_in_g, v.evidence1)) return fail("n1 membership unsupported");
      return true;
    }
  }
  return fail("unknown claim");
}

void StepReport::write(std::ostream& out) const {
  out << header.dump() << "\n";
  for (const auto& v : verdicts) out << v.to_json().dump() << "\n";
  out << summary.dump() << "\n";
}

StepReport run_step_demo(ChainState& chain, std::uint64_t seed, std::uint32_t samples,
                         std::uint32_t prefix) {
  SplitMix64 rng(seed);
  const PointUltrafilter& u = chain.ultrafilter();

  StepReport report;
  report.header = nlohmann::json{{"algorithm", "splitmix64"},
                                 {"format", "bastep-report/1"},
                                 {"point", u.point().str()},
                                 {"prefix", prefix},
                                 {"samples", samples},
                                 {"seed", seed}};

  auto emit = [&](VerdictCertificate v) {
    if (v.inconclusive)
      ++report.inconclusive;
    else if (!v.verified)
      ++report.failed;
    report.verdicts.push_back(std::move(v));
  };

  for (std::uint32_t s = 0; s < samples; ++s) {
    emit(verify_ultra_destroyed(chain, random_nonmember(rng, u)));
    emit(verify_g_differs(chain, random_set(rng)));

    IntervalSet e = random_set(rng), f = random_set(rng);
    emit(verify_ideal_preserved(chain, e, f, prefix));
    emit(verify_free_preserved(chain, e, f, prefix));

    // A nonzero extension element with a cheaply known member.
    IntervalSet ae = IntervalSet::full(), af = IntervalSet::full();
    for (int attempt = 0; attempt < 16; ++attempt) {
      IntervalSet ce = random_set(rng), cf = random_set(rng);
      if (!is_empty(set_intersect(ce, cf))) {
        ae = ce; af = cf;
        break;
      }
      IntervalSet d1 = set_diff(ce, cf), d2 = set_diff(cf, ce);
      if (!d1.empty() && chain.g_contains(decode(min_rank_point(d1)))) {
        ae = ce; af = cf;
        break;
      }
      if (!d2.empty() && !chain.g_contains(decode(min_rank_point(d2)))) {
        ae = ce; af = cf;
        break;
      }
    }
    emit(verify_not_atom(chain, ae, af));
  }

  std::uint32_t verified = 0;
  for (const auto& v : report.verdicts)
    if (v.verified) ++verified;
  report.summary = nlohmann::json{{"claims", report.verdicts.size()},
                                  {"failed", report.failed},
                                  {"inconclusive", report.inconclusive},
                                  {"summary", true},
                                  {"verified", verified}};
  return report;
}

}  // namespace bastep
