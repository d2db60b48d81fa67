#include "groupcut/json_io.hpp"

#include <stdexcept>

namespace groupcut {

namespace {

Json rat_json(const Rat& r) { return r.str(); }

Rat rat_from(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected rational string");
  return Rat::parse(j.get<std::string>());
}

}  // namespace

Json curve_to_json(const PiecewiseCurve& c) {
  Json pts = Json::array();
  const auto& xs = c.breakpoints().points();
  for (size_t i = 0; i < xs.size(); ++i) {
    const LimitTriple& t = c.triples()[i];
    Json p;
    p["x"] = rat_json(xs[i]);
    if (t.is_continuous()) {
      p["value"] = rat_json(t.value);
    } else {
      p["left"] = rat_json(t.left);
      p["value"] = rat_json(t.value);
      p["right"] = rat_json(t.right);
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

PiecewiseCurve curve_from_json(const Json& j) {
  std::vector<Rat> xs;
  std::vector<LimitTriple> ts;
  for (const Json& p : j) {
    xs.push_back(rat_from(p.at("x")));
    Rat v = rat_from(p.at("value"));
    Rat l = p.contains("left") ? rat_from(p.at("left")) : v;
    Rat r = p.contains("right") ? rat_from(p.at("right")) : v;
    ts.push_back(LimitTriple{l, v, r});
  }
  return PiecewiseCurve(BreakpointSet(std::move(xs)), std::move(ts));
}

Json function_to_json(const PwlFunction& fn) {
  Json j;
  j["f"] = rat_json(fn.f());
  j["breakpoints"] = curve_to_json(fn.curve());
  return j;
}

PwlFunction function_from_json(const Json& j) {
  return PwlFunction(curve_from_json(j.at("breakpoints")), rat_from(j.at("f")));
}

Json move_to_json(const Move& m) {
  Json j;
  j["chi"] = m.chi();
  j["param"] = rat_json(m.param());
  if (m.is_empty()) {
    j["dom"] = nullptr;
  } else {
    j["dom"] = Json::array({rat_json(m.domain().lo()), rat_json(m.domain().hi())});
  }
  return j;
}

Move move_from_json(const Json& j) {
  int chi = j.at("chi").get<int>();
  Rat param = rat_from(j.at("param"));
  OpenInterval dom;
  if (!j.at("dom").is_null())
    dom = OpenInterval(rat_from(j.at("dom")[0]), rat_from(j.at("dom")[1]));
  if (chi == 1) return dom.is_empty() ? Move::empty_translation() : Move::translation(param, dom);
  if (chi == -1) return dom.is_empty() ? Move::empty_reflection() : Move::reflection(param, dom);
  throw std::invalid_argument("move: chi must be 1 or -1");
}

Json interval_union_to_json(const IntervalUnion& u) {
  Json j = Json::array();
  for (const auto& p : u.parts())
    j.push_back(Json::array({rat_json(p.lo()), rat_json(p.hi())}));
  return j;
}

IntervalUnion interval_union_from_json(const Json& j) {
  std::vector<OpenInterval> parts;
  for (const Json& p : j) parts.emplace_back(rat_from(p[0]), rat_from(p[1]));
  return IntervalUnion(std::move(parts));
}

Json presentation_to_json(const FinitePresentation& p) {
  Json j;
  j["moves"] = Json::array();
  for (const Move& m : p.moves()) j["moves"].push_back(move_to_json(m));
  j["components"] = Json::array();
  for (const auto& c : p.components()) j["components"].push_back(interval_union_to_json(c));
  j["continuity"] = interval_union_to_json(p.continuity());
  return j;
}

FinitePresentation presentation_from_json(const Json& j) {
  std::vector<Move> moves;
  for (const Json& m : j.at("moves")) moves.push_back(move_from_json(m));
  std::vector<IntervalUnion> comps;
  for (const Json& c : j.at("components")) comps.push_back(interval_union_from_json(c));
  return FinitePresentation(std::move(moves), std::move(comps),
                            interval_union_from_json(j.at("continuity")));
}

Json minimality_to_json(const MinimalityReport& rep) {
  Json j;
  j["minimal"] = rep.minimal;
  if (!rep.minimal) {
    j["reason"] = rep.reason;
    if (rep.witness)
      j["witness"] = Json::array({rat_json(rep.witness->first), rat_json(rep.witness->second)});
  }
  return j;
}

Json refinement_to_json(const RefinementData& ref) {
  Json j;
  j["C"] = interval_union_to_json(ref.C);
  j["U"] = interval_union_to_json(ref.U);
  auto points = [](const std::vector<Rat>& v) {
    Json a = Json::array();
    for (const Rat& x : v) a.push_back(x.str());
    return a;
  };
  j["X"] = points(ref.X);
  j["V"] = points(ref.V);
  j["Y"] = points(ref.Y);
  j["Z"] = points(ref.Z);
  j["B_prime"] = points(ref.Bprime.points());
  j["U_prime"] = interval_union_to_json(ref.Uprime);
  return j;
}

Json report_to_json(const ExtremalityReport& rep) {
  Json j;
  j["verdict"] = to_string(rep.verdict);
  if (!rep.reason.empty()) j["reason"] = rep.reason;
  j["minimality"] = minimality_to_json(rep.minimality);
  if (rep.closure) {
    j["closure"] = presentation_to_json(rep.closure->presentation);
    j["closure_budget_exhausted"] = rep.closure->budget_exhausted;
  }
  if (rep.refinement) j["refinement"] = refinement_to_json(*rep.refinement);
  Json comps = Json::array();
  for (const auto& c : rep.components) {
    Json jc;
    Json ivs = Json::array();
    for (const auto& iv : c.intervals)
      ivs.push_back(Json::array({iv.lo().str(), iv.hi().str()}));
    jc["intervals"] = std::move(ivs);
    jc["fundamental_domain"] =
        Json::array({c.fundamental_domain.lo().str(), c.fundamental_domain.hi().str()});
    Json cm = Json::array();
    for (const Move& m : c.connecting_moves) cm.push_back(move_to_json(m));
    jc["connecting_moves"] = std::move(cm);
    comps.push_back(std::move(jc));
  }
  j["uncovered_components"] = std::move(comps);
  if (rep.space) {
    j["finite_dimension"] = rep.space->finite_basis.size();
    Json basis = Json::array();
    for (const auto& b : rep.space->finite_basis) basis.push_back(curve_to_json(b.curve()));
    j["finite_basis"] = std::move(basis);
  }
  if (rep.witness) {
    j["witness"] = curve_to_json(rep.witness->curve());
    j["epsilon"] = rep.epsilon.str();
  }
  return j;
}

}  // namespace groupcut
