#include "groupcut/moves.hpp"

#include <stdexcept>

namespace groupcut {

namespace {
const OpenInterval kUnit(Rat(0), Rat(1));
}

Move::Move(int chi, Rat param, OpenInterval dom)
    : chi_(chi), param_(std::move(param)), dom_(std::move(dom)) {
  if (dom_.is_empty()) {
    param_ = chi_ == 1 ? Rat(0) : Rat(1);
    return;
  }
  if (chi_ == 1) {
    if (!(Rat(-1) < param_ && param_ < Rat(1)))
      throw std::invalid_argument("Move: translation parameter out of (-1,1)");
  } else {
    if (!(Rat(0) < param_ && param_ < Rat(2)))
      throw std::invalid_argument("Move: reflection parameter out of (0,2)");
  }
  if (!kUnit.contains(dom_) || !kUnit.contains(image()))
    throw std::invalid_argument("Move: domain and image must lie inside (0,1): " + str());
}

Move Move::translation(const Rat& t, const OpenInterval& dom) { return Move(1, t, dom); }
Move Move::reflection(const Rat& r, const OpenInterval& dom) { return Move(-1, r, dom); }

OpenInterval Move::image() const {
  if (dom_.is_empty()) return dom_;
  return chi_ == 1 ? translate(dom_, param_) : reflect(dom_, param_);
}

std::optional<Rat> Move::apply(const Rat& x) const {
  if (!dom_.contains(x)) return std::nullopt;
  return map(x);
}

OpenInterval Move::preimage(const OpenInterval& i) const {
  if (i.is_empty()) return i;
  return chi_ == 1 ? translate(i, -param_) : reflect(i, param_);
}

std::string Move::str() const {
  std::string head = chi_ == 1 ? "tau(" : "rho(";
  return head + param_.str() + ")|" + dom_.str();
}

bool operator<(const Move& a, const Move& b) {
  if (a.chi_ != b.chi_) return a.chi_ > b.chi_;  // translations first
  if (a.param_ != b.param_) return a.param_ < b.param_;
  return a.dom_ < b.dom_;
}

Move compose(const Move& outer, const Move& inner) {
  int chi = outer.chi() * inner.chi();
  OpenInterval dom = interval_intersect(inner.domain(), inner.preimage(outer.domain()));
  Rat param;
  if (inner.is_translation() && outer.is_translation())
    param = inner.param() + outer.param();
  else if (inner.is_reflection() && outer.is_translation())
    param = inner.param() + outer.param();
  else if (inner.is_translation() && outer.is_reflection())
    param = outer.param() - inner.param();
  else
    param = outer.param() - inner.param();
  if (dom.is_empty()) return Move(chi == 1 ? Move::empty_translation() : Move::empty_reflection());
  return chi == 1 ? Move::translation(param, dom) : Move::reflection(param, dom);
}

Move inverse(const Move& m) {
  if (m.is_empty()) return m;
  if (m.is_translation()) return Move::translation(-m.param(), m.image());
  return Move::reflection(m.param(), m.image());
}

Move restrict(const Move& m, const OpenInterval& d) {
  if (!m.domain().contains(d))
    throw std::invalid_argument("restrict: " + d.str() + " not within domain of " + m.str());
  if (d.is_empty())
    return m.is_translation() ? Move::empty_translation() : Move::empty_reflection();
  return m.is_translation() ? Move::translation(m.param(), d) : Move::reflection(m.param(), d);
}

Move corestrict(const Move& m, const OpenInterval& i) {
  if (!m.image().contains(i))
    throw std::invalid_argument("corestrict: " + i.str() + " not within image of " + m.str());
  return restrict(m, interval_intersect(m.domain(), m.preimage(i)));
}

bool is_restriction_of(const Move& a, const Move& b) {
  if (a.chi() != b.chi()) return false;
  if (a.is_empty()) return true;
  return a.param() == b.param() && b.domain().contains(a.domain());
}

std::pair<std::pair<Rat, Rat>, std::pair<Rat, Rat>> graph_segment(const Move& m) {
  if (m.is_empty()) throw std::invalid_argument("graph_segment: empty move has no graph");
  const Rat& lo = m.domain().lo();
  const Rat& hi = m.domain().hi();
  return {{lo, m.map(lo)}, {hi, m.map(hi)}};
}

std::vector<Move> wrap_translation(const Rat& t, const OpenInterval& dom) {
  std::vector<Move> out;
  if (dom.is_empty()) return out;
  Rat t0 = t.mod1();
  if (t0 == Rat(0)) {
    OpenInterval d = interval_intersect(dom, kUnit);
    if (!d.is_empty()) out.push_back(Move::translation(Rat(0), d));
    return out;
  }
  // x + t0 stays in (0,1) on (-t0, 1-t0); lands in (1,2) on (1-t0, 2-t0).
  OpenInterval d1 = interval_intersect(dom, OpenInterval(-t0, Rat(1) - t0));
  OpenInterval d2 = interval_intersect(dom, OpenInterval(Rat(1) - t0, Rat(2) - t0));
  d1 = interval_intersect(d1, kUnit);
  d2 = interval_intersect(d2, kUnit);
  if (!d1.is_empty()) out.push_back(Move::translation(t0, d1));
  if (!d2.is_empty()) out.push_back(Move::translation(t0 - Rat(1), d2));
  return out;
}

}  // namespace groupcut
