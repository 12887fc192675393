#include "bastep/certificate.hpp"

namespace bastep {

std::string_view tag_name(DenseTag t) {
  switch (t) {
    case DenseTag::Da: return "Da";
    case DenseTag::Ei: return "Ei";
    case DenseTag::Def: return "Def";
    default: return "Eef";
  }
}

DenseRequest DenseRequest::da(IntervalSet a) {
  DenseRequest r;
  r.tag = DenseTag::Da;
  r.a = std::move(a);
  return r;
}

DenseRequest DenseRequest::ei(BigNat i) {
  DenseRequest r;
  r.tag = DenseTag::Ei;
  r.i = std::move(i);
  return r;
}

DenseRequest DenseRequest::def(IntervalSet e, IntervalSet f) {
  DenseRequest r;
  r.tag = DenseTag::Def;
  r.e = std::move(e);
  r.f = std::move(f);
  return r;
}

DenseRequest DenseRequest::eef(IntervalSet e, IntervalSet f) {
  DenseRequest r;
  r.tag = DenseTag::Eef;
  r.e = std::move(e);
  r.f = std::move(f);
  return r;
}

std::string DenseRequest::key() const {
  std::string out(tag_name(tag));
  out += ' ';
  switch (tag) {
    case DenseTag::Da:
      out += a.str();
      break;
    case DenseTag::Ei:
      out += i.str();
      break;
    default:
      out += e.str();
      out += ' ';
      out += f.str();
  }
  return out;
}

DenseRequest DenseRequest::parse(std::string_view line) {
  auto sp = line.find(' ');
  if (sp == std::string_view::npos) throw Error("dense request: missing parameters");
  std::string_view kind = line.substr(0, sp);
  std::string_view args = line.substr(sp + 1);
  if (kind == "Da") return da(parse_interval_set(args));
  if (kind == "Ei") return ei(BigNat(std::string(args)));
  if (kind == "Def" || kind == "Eef") {
    auto mid = args.find(' ');
    if (mid == std::string_view::npos) throw Error("dense request: expected two sets");
    IntervalSet e = parse_interval_set(args.substr(0, mid));
    IntervalSet f = parse_interval_set(args.substr(mid + 1));
    return kind == "Def" ? def(std::move(e), std::move(f)) : eef(std::move(e), std::move(f));
  }
  throw Error("dense request: unknown kind '" + std::string(kind) + "'");
}

nlohmann::json Certificate::to_json() const {
  nlohmann::json w;
  switch (dense_set) {
    case DenseTag::Da:
      w["a"] = request.a.str();
      w["x0"] = added0.str();
      w["x1"] = added1.str();
      if (w0) w["w0"] = w0->str();
      if (w1) w["w1"] = w1->str();
      break;
    case DenseTag::Ei:
      w["i"] = request.i.str();
      w["cell"] = added0.str();
      break;
    default:
      w["e"] = request.e.str();
      w["f"] = request.f.str();
      if (head) w["head"] = *head;
      if (head) w["rest"] = rest;
      if (!cover.empty() || (dense_set == DenseTag::Def && clause == 3)) w["pieces"] = cover;
      if (idx_i) w["i"] = *idx_i;
      if (idx_j) w["j"] = *idx_j;
  }
  nlohmann::json out{{"dense_set", std::string(tag_name(dense_set))},
                     {"clause", clause},
                     {"witnesses", std::move(w)},
                     {"result", result->to_json()}};
  if (mirrored) out["mirrored"] = true;
  return out;
}

}  // namespace bastep
