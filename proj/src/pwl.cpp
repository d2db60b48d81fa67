#include "groupcut/pwl.hpp"

#include <algorithm>
#include <stdexcept>

namespace groupcut {

BreakpointSet::BreakpointSet(std::vector<Rat> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw std::invalid_argument("BreakpointSet: need at least {0, 1}");
  if (points_.front() != Rat(0) || points_.back() != Rat(1))
    throw std::invalid_argument("BreakpointSet: first must be 0 and last must be 1");
  for (size_t i = 1; i < points_.size(); ++i)
    if (!(points_[i - 1] < points_[i]))
      throw std::invalid_argument("BreakpointSet: not strictly increasing");
}

PiecewiseCurve::PiecewiseCurve(BreakpointSet breakpoints, std::vector<LimitTriple> triples)
    : bkpts_(std::move(breakpoints)), triples_(std::move(triples)) {
  if (triples_.size() != bkpts_.size())
    throw std::invalid_argument("PiecewiseCurve: one triple per breakpoint required");
  if (!(triples_.front() == triples_.back()))
    throw std::invalid_argument("PiecewiseCurve: triples at 0 and 1 must agree (periodicity)");
}

size_t PiecewiseCurve::cell_index(const Rat& y) const {
  // Largest i with points[i] <= y; y in [0,1).
  const auto& xs = bkpts_.points();
  size_t lo = 0, hi = xs.size() - 1;
  while (lo + 1 < hi) {
    size_t mid = (lo + hi) / 2;
    if (xs[mid] <= y)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

Rat PiecewiseCurve::eval(const Rat& x) const {
  Rat y = x.mod1();
  size_t i = cell_index(y);
  const auto& xs = bkpts_.points();
  if (xs[i] == y) return triples_[i].value;
  // Affine interpolant of right limit at x_i and left limit at x_{i+1}.
  const Rat& a = xs[i];
  const Rat& b = xs[i + 1];
  const Rat& va = triples_[i].right;
  const Rat& vb = triples_[i + 1].left;
  return va + (vb - va) * (y - a) / (b - a);
}

LimitTriple PiecewiseCurve::limits(const Rat& x) const {
  Rat y = x.mod1();
  size_t i = cell_index(y);
  if (bkpts_[i] == y) return triples_[i];
  Rat v = eval(y);
  return LimitTriple{v, v, v};
}

Rat PiecewiseCurve::limit_at(const Rat& x, int dir) const {
  LimitTriple t = limits(x);
  if (dir < 0) return t.left;
  if (dir > 0) return t.right;
  return t.value;
}

bool PiecewiseCurve::is_continuous() const {
  for (const auto& t : triples_)
    if (!t.is_continuous()) return false;
  return true;
}

std::vector<Rat> PiecewiseCurve::interior_discontinuities() const {
  std::vector<Rat> out;
  for (size_t i = 1; i + 1 < triples_.size(); ++i)
    if (!triples_[i].is_continuous()) out.push_back(bkpts_[i]);
  return out;
}

PiecewiseCurve PiecewiseCurve::canonicalized() const {
  const auto& xs = bkpts_.points();
  std::vector<Rat> keep_x{xs.front()};
  std::vector<LimitTriple> keep_t{triples_.front()};
  for (size_t i = 1; i + 1 < xs.size(); ++i) {
    bool removable = triples_[i].is_continuous();
    if (removable) {
      // Affine across: the previous kept anchor, this point, and the next
      // breakpoint's left anchor must be collinear.
      const Rat& x0 = keep_x.back();
      const Rat& y0 = keep_t.back().right;
      const Rat& x1 = xs[i];
      const Rat& y1 = triples_[i].value;
      const Rat& x2 = xs[i + 1];
      const Rat& y2 = triples_[i + 1].left;
      removable = (y1 - y0) * (x2 - x1) == (y2 - y1) * (x1 - x0);
    }
    if (!removable) {
      keep_x.push_back(xs[i]);
      keep_t.push_back(triples_[i]);
    }
  }
  keep_x.push_back(xs.back());
  keep_t.push_back(triples_.back());
  return PiecewiseCurve(BreakpointSet(std::move(keep_x)), std::move(keep_t));
}

PiecewiseCurve PiecewiseCurve::combine(
    const std::vector<std::pair<Rat, const PiecewiseCurve*>>& terms) {
  if (terms.empty()) throw std::invalid_argument("combine: no terms");
  std::vector<Rat> xs;
  for (const auto& [c, fn] : terms)
    for (const Rat& x : fn->breakpoints().points()) xs.push_back(x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<LimitTriple> ts;
  ts.reserve(xs.size());
  for (const Rat& x : xs) {
    LimitTriple acc{Rat(0), Rat(0), Rat(0)};
    for (const auto& [c, fn] : terms) {
      LimitTriple t = fn->limits(x);
      acc.left += c * t.left;
      acc.value += c * t.value;
      acc.right += c * t.right;
    }
    ts.push_back(acc);
  }
  return PiecewiseCurve(BreakpointSet(std::move(xs)), std::move(ts));
}

PiecewiseCurve PiecewiseCurve::interpolate(std::vector<Rat> xs, std::vector<Rat> values) {
  if (xs.size() != values.size()) throw std::invalid_argument("interpolate: size mismatch");
  std::vector<LimitTriple> ts;
  ts.reserve(xs.size());
  for (const Rat& v : values) ts.push_back(LimitTriple{v, v, v});
  return PiecewiseCurve(BreakpointSet(std::move(xs)), std::move(ts));
}

PwlFunction::PwlFunction(PiecewiseCurve curve, Rat f) : curve_(std::move(curve)), f_(std::move(f)) {
  if (!(Rat(0) < f_ && f_ < Rat(1)))
    throw std::invalid_argument("PwlFunction: f must lie strictly between 0 and 1");
}

IntervalUnion PwlFunction::continuity_set() const {
  std::vector<Rat> cuts = curve_.interior_discontinuities();
  std::vector<OpenInterval> parts;
  Rat prev(0);
  for (const Rat& c : cuts) {
    parts.emplace_back(prev, c);
    prev = c;
  }
  parts.emplace_back(prev, Rat(1));
  return IntervalUnion(std::move(parts));
}

bool PerturbationFn::is_zero() const {
  for (const auto& t : curve_.triples())
    if (t.left != Rat(0) || t.value != Rat(0) || t.right != Rat(0)) return false;
  return true;
}

bool operator==(const PerturbationFn& a, const PerturbationFn& b) {
  return a.curve_.canonicalized() == b.curve_.canonicalized();
}

PerturbationFn zero_perturbation() {
  return PerturbationFn(PiecewiseCurve::interpolate({Rat(0), Rat(1)}, {Rat(0), Rat(0)}));
}

PwlFunction gmic(const Rat& f) {
  if (!(Rat(0) < f && f < Rat(1))) throw std::invalid_argument("gmic: f out of (0,1)");
  return PwlFunction(
      PiecewiseCurve::interpolate({Rat(0), f, Rat(1)}, {Rat(0), Rat(1), Rat(0)}), f);
}

PwlFunction equiv7_example_1() {
  Rat h(1, 2);
  BreakpointSet b({Rat(0), h, Rat(1)});
  std::vector<LimitTriple> ts{
      {Rat(0), Rat(0), h},  // left limit at 0 comes from 2(1-x) -> 0
      {h, Rat(1), Rat(1)},
      {Rat(0), Rat(0), h},
  };
  return PwlFunction(PiecewiseCurve(std::move(b), std::move(ts)), h);
}

PwlFunction minimal_no_covered_interval() {
  Rat h(1, 2);
  BreakpointSet b({Rat(0), h, Rat(1)});
  std::vector<LimitTriple> ts{
      {h, Rat(0), h},
      {h, Rat(1), h},
      {h, Rat(0), h},
  };
  return PwlFunction(PiecewiseCurve(std::move(b), std::move(ts)), h);
}

PwlFunction two_slope(const Rat& f, const Rat& s) {
  if (!(Rat(0) < f && f < Rat(1))) throw std::invalid_argument("two_slope: f out of (0,1)");
  if (!(Rat(0) < s && s < Rat(1))) throw std::invalid_argument("two_slope: s out of (0,1)");
  // Peak height h = (1+s)/2 at x = a, trough 1-h at f-a; the two falling
  // pieces share the slope -1/(1-f).
  Rat a = (f - s * (Rat(1) - f)) / Rat(2);
  if (!(Rat(0) < a)) throw std::invalid_argument("two_slope: s too large for this f");
  Rat h = (Rat(1) + s) / Rat(2);
  return PwlFunction(PiecewiseCurve::interpolate({Rat(0), a, f - a, f, Rat(1)},
                                                 {Rat(0), h, Rat(1) - h, Rat(1), Rat(0)}),
                     f);
}

PwlFunction make_builtin(const std::string& name, const std::vector<Rat>& params) {
  if (name == "gmic") {
    if (params.size() != 1) throw std::invalid_argument("gmic takes one parameter f");
    return gmic(params[0]);
  }
  if (name == "equiv7_example_1") return equiv7_example_1();
  if (name == "minimal_no_covered_interval") return minimal_no_covered_interval();
  if (name == "two_slope") {
    if (params.size() != 2) throw std::invalid_argument("two_slope takes parameters f, s");
    return two_slope(params[0], params[1]);
  }
  throw std::invalid_argument("unknown builtin '" + name + "'");
}

PwlFunction interpolate_from_grid(const std::map<Rat, Rat>& values, const Rat& f) {
  size_t q = values.size();
  if (q < 2) throw std::invalid_argument("interpolate_from_grid: need q >= 2");
  std::vector<Rat> xs, vs;
  size_t i = 0;
  for (const auto& [x, v] : values) {
    if (x != Rat(static_cast<long>(i), static_cast<long>(q)))
      throw std::invalid_argument("interpolate_from_grid: keys must be exactly {0, 1/q, ..., (q-1)/q}");
    xs.push_back(x);
    vs.push_back(v);
    ++i;
  }
  if (vs.front() != Rat(0))
    throw std::invalid_argument("interpolate_from_grid: value at 0 must be 0");
  if (!values.count(f)) throw std::invalid_argument("interpolate_from_grid: f not on grid");
  xs.push_back(Rat(1));
  vs.push_back(Rat(0));
  return PwlFunction(PiecewiseCurve::interpolate(std::move(xs), std::move(vs)).canonicalized(), f);
}

PerturbationFn linear_combine(const std::vector<std::pair<Rat, const PerturbationFn*>>& terms) {
  std::vector<std::pair<Rat, const PiecewiseCurve*>> curves;
  curves.reserve(terms.size());
  for (const auto& [c, p] : terms) curves.emplace_back(c, &p->curve());
  return PerturbationFn(PiecewiseCurve::combine(curves));
}

PwlFunction perturbed(const PwlFunction& fn, const Rat& eps, const PerturbationFn& pert) {
  PiecewiseCurve c =
      PiecewiseCurve::combine({{Rat(1), &fn.curve()}, {eps, &pert.curve()}});
  return PwlFunction(std::move(c), fn.f());
}

}  // namespace groupcut
