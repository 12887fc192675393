#include "bastep/chain.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace bastep {

namespace {
constexpr std::string_view kSessionFormat = "bastep-session/1";
}

ChainState::ChainState(PointUltrafilter u, IdealFamily X, FreeSeq C)
    : u_(std::move(u)), X_(std::move(X)), C_(std::move(C)) {
  chain_.push_back(std::make_shared<const Condition>(Condition::root()));
}

ChainState ChainState::standard() {
  return ChainState(PointUltrafilter::standard(), IdealFamily::canonical(),
                    FreeSeq::canonical());
}

const ChainState::Step& ChainState::meet(const DenseRequest& req) {
  std::string key = req.key();
  if (auto it = met_.find(key); it != met_.end()) return log_[it->second];

  Certificate cert = apply_extender(bottom_ptr(), req, u_, X_, C_);
  if (!(*cert.result == bottom())) chain_.push_back(cert.result);
  log_.push_back(Step{std::move(cert), chain_.size() - 1});
  met_.emplace(std::move(key), log_.size() - 1);
  return log_.back();
}

bool ChainState::g_contains(const BigNat& n) {
  if (auto it = g_cache_.find(n); it != g_cache_.end()) return it->second;
  const Step& step = meet(DenseRequest::ei(n));
  bool in = step.cert.result->p0().contains(encode(n));
  g_cache_.emplace(n, in);
  return in;
}

std::optional<IntervalSet> ChainState::try_normalize(const IntervalSet& e,
                                                     const IntervalSet& f) {
  if (u_.contains(set_symdiff(e, f))) return std::nullopt;
  meet(DenseRequest::def(e, f));  // lands in clause 1: e△f gets covered
  const Condition& b = bottom();
  return set_union(set_intersect(e, f),
                   set_union(set_intersect(b.p0(), set_diff(e, f)),
                             set_intersect(b.p1(), set_diff(f, e))));
}

void ChainState::save_session(std::ostream& out) const {
  out << "format=" << kSessionFormat << "\n";
  out << "point=" << u_.point().str() << "\n";
  for (const Step& s : log_) out << "meet=" << s.cert.request.key() << "\n";
}

ChainState ChainState::replay_session(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto bad = [&](const std::string& msg) {
    return Error("session line " + std::to_string(lineno) + ": " + msg);
  };

  if (!std::getline(in, line) || line != std::string("format=") + std::string(kSessionFormat))
    throw Error("session: missing or unsupported format header");
  lineno = 1;
  std::optional<PointUltrafilter> u;
  std::vector<DenseRequest> meets;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw bad("expected key=value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key == "point") {
      if (u) throw bad("duplicate point");
      u.emplace(Rational::parse(value));
    } else if (key == "meet") {
      try {
        meets.push_back(DenseRequest::parse(value));
      } catch (const Error& e) {
        throw bad(e.what());
      }
    } else {
      throw bad("unknown key '" + key + "'");
    }
  }
  if (!u) throw Error("session: missing point");

  ChainState state(*u, IdealFamily::canonical(), FreeSeq::canonical());
  for (const DenseRequest& r : meets) state.meet(r);
  return state;
}

}  // namespace bastep
