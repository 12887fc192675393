#include "bastep/interval_set.hpp"

#include <algorithm>
#include <cctype>

namespace bastep {

IntervalSet IntervalSet::interval(Dyadic l, Dyadic r) {
  if (!(l < r)) throw Error("interval: requires l < r");
  IntervalSet s;
  s.ivs_.emplace_back(std::move(l), std::move(r));
  return s;
}

IntervalSet IntervalSet::cell(const BigNat& m, std::uint32_t k) {
  if (m < 0 || m >= (BigNat(1) << k)) throw Error("cell: index out of range");
  return interval(Dyadic(m, k), Dyadic(m + 1, k));
}

IntervalSet IntervalSet::from_intervals(std::vector<Interval> intervals) {
  for (const auto& [l, r] : intervals)
    if (!(l < r)) throw Error("interval list: requires l < r");
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.first < b.first; });
  IntervalSet s;
  for (auto& iv : intervals) {
    if (!s.ivs_.empty() && iv.first <= s.ivs_.back().second) {
      if (s.ivs_.back().second < iv.second) s.ivs_.back().second = std::move(iv.second);
    } else {
      s.ivs_.push_back(std::move(iv));
    }
  }
  return s;
}

const Dyadic& IntervalSet::min() const {
  if (ivs_.empty()) throw Error("min of empty set");
  return ivs_.front().first;
}

bool IntervalSet::contains(const Dyadic& d) const {
  // Last interval with l <= d, then test d < r.
  auto it = std::upper_bound(ivs_.begin(), ivs_.end(), d,
                             [](const Dyadic& v, const Interval& iv) { return v < iv.first; });
  if (it == ivs_.begin()) return false;
  --it;
  return d < it->second;
}

std::string IntervalSet::str() const {
  if (ivs_.empty()) return "{}";
  std::string out;
  bool first = true;
  for (const auto& [l, r] : ivs_) {
    if (!first) out += 'u';
    first = false;
    out += '[';
    out += l.str();
    out += ',';
    out += r.str();
    out += ')';
  }
  return out;
}

namespace {

// Sweep over the merged endpoint sequence of a and b; keep(inA, inB) selects
// which regions survive. Adjacent surviving regions merge, so the result is
// canonical by construction.
IntervalSet combine(const IntervalSet& a, const IntervalSet& b, bool k00, bool k01, bool k10,
                    bool k11) {
  auto keep = [&](bool ia, bool ib) { return ia ? (ib ? k11 : k10) : (ib ? k01 : k00); };
  const auto& av = a.pieces();
  const auto& bv = b.pieces();
  std::size_t ia = 0, ib = 0;  // counts of endpoints consumed (l and r alternate)
  bool in_a = false, in_b = false;

  std::vector<IntervalSet::Interval> out;
  std::optional<Dyadic> open;  // left end of the surviving region being built
  Dyadic cur = Dyadic::zero();

  auto emit_to = [&](const Dyadic& next, bool kept) {
    if (kept && !open) {
      open = cur;
    } else if (!kept && open) {
      if (*open < cur) out.emplace_back(*open, cur);
      open.reset();
    }
    cur = next;
  };

  auto next_a = [&]() -> const Dyadic* {
    if (ia >= 2 * av.size()) return nullptr;
    const auto& iv = av[ia / 2];
    return (ia % 2 == 0) ? &iv.first : &iv.second;
  };
  auto next_b = [&]() -> const Dyadic* {
    if (ib >= 2 * bv.size()) return nullptr;
    const auto& iv = bv[ib / 2];
    return (ib % 2 == 0) ? &iv.first : &iv.second;
  };

  while (true) {
    const Dyadic* pa = next_a();
    const Dyadic* pb = next_b();
    if (!pa && !pb) break;
    const Dyadic* next = pa;
    if (!next || (pb && *pb < *next)) next = pb;
    bool kept = keep(in_a, in_b);
    // Close or extend the region [cur, *next), then toggle whichever sets
    // have an endpoint here.
    if (cur < *next) emit_to(*next, kept);
    Dyadic here = *next;
    while (pa && *pa == here) {
      in_a = !in_a;
      ++ia;
      pa = next_a();
    }
    while (pb && *pb == here) {
      in_b = !in_b;
      ++ib;
      pb = next_b();
    }
    cur = here;
  }
  // Tail region up to 1.
  if (cur < Dyadic::one()) emit_to(Dyadic::one(), keep(in_a, in_b));
  if (open && *open < cur) out.emplace_back(*open, cur);

  return IntervalSet::from_intervals(std::move(out));
}

}  // namespace

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  return combine(a, b, false, true, true, true);
}
IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b) {
  return combine(a, b, false, false, false, true);
}
IntervalSet set_diff(const IntervalSet& a, const IntervalSet& b) {
  return combine(a, b, false, false, true, false);
}
IntervalSet set_symdiff(const IntervalSet& a, const IntervalSet& b) {
  return combine(a, b, false, true, true, false);
}
IntervalSet set_complement(const IntervalSet& a) {
  return combine(a, IntervalSet(), true, false, false, false);
}

bool is_empty(const IntervalSet& a) { return a.empty(); }

bool is_subset(const IntervalSet& a, const IntervalSet& b) {
  // Each piece of a must sit inside a single piece of b (b has gaps between
  // its pieces, so a contiguous piece cannot span two of them).
  const auto& bv = b.pieces();
  for (const auto& [l, r] : a.pieces()) {
    auto it = std::upper_bound(bv.begin(), bv.end(), l,
                               [](const Dyadic& v, const IntervalSet::Interval& iv) {
                                 return v < iv.first;
                               });
    if (it == bv.begin()) return false;
    --it;  // it->first <= l
    if (it->second < r) return false;
  }
  return true;
}

IntervalSet set_union_all(const std::vector<IntervalSet>& parts) {
  std::vector<IntervalSet::Interval> all;
  for (const auto& p : parts) all.insert(all.end(), p.pieces().begin(), p.pieces().end());
  return IntervalSet::from_intervals(std::move(all));
}

Dyadic min_rank_point(const Dyadic& l, const Dyadic& r) {
  if (!(l < r)) throw Error("min_rank_point: empty interval");
  for (std::uint32_t j = 0;; ++j) {
    // ceil(l * 2^j)
    BigNat m;
    if (j >= l.exp()) {
      m = l.num() << (j - l.exp());
    } else {
      std::uint32_t s = l.exp() - j;
      m = (l.num() + (BigNat(1) << s) - 1) >> s;
    }
    Dyadic cand(m, j);
    if (cand < r) return cand;  // cand >= l by construction
    // Succeeds no later than j == l.exp(), where cand == l.
  }
}

Dyadic min_rank_point(const IntervalSet& a) {
  if (a.empty()) throw Error("min_rank_point: empty set");
  const auto& [l, r] = a.pieces().front();
  return min_rank_point(l, r);
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void expect(char c, const char* what) {
    if (done() || text[pos] != c)
      throw ParseError(pos, std::string("expected ") + what);
    ++pos;
  }
  BigNat digits() {
    std::size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError(pos, "expected digits");
    return BigNat(std::string(text.substr(start, pos - start)));
  }
  Dyadic dyadic() {
    std::size_t start = pos;
    BigNat num = digits();
    expect('/', "'/' in dyadic");
    BigNat den = digits();
    try {
      return Dyadic::from_fraction(num, den);
    } catch (const Error& e) {
      throw ParseError(start, e.what());
    }
  }
};

}  // namespace

IntervalSet parse_interval_set(std::string_view text) {
  Cursor c{text};
  if (!c.done() && c.peek() == '{') {
    c.expect('{', "'{'");
    c.expect('}', "'}'");
    if (!c.done()) throw ParseError(c.pos, "trailing input after '{}'");
    return IntervalSet();
  }
  std::vector<IntervalSet::Interval> ivs;
  while (true) {
    std::size_t start = c.pos;
    c.expect('[', "'['");
    Dyadic l = c.dyadic();
    c.expect(',', "','");
    Dyadic r = c.dyadic();
    c.expect(')', "')'");
    if (!(l < r)) throw ParseError(start, "interval requires l < r");
    ivs.emplace_back(std::move(l), std::move(r));
    if (c.done()) break;
    c.expect('u', "'u' between intervals");
  }
  return IntervalSet::from_intervals(std::move(ivs));
}

}  // namespace bastep
