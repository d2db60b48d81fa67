#include "groupcut/perturbation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace groupcut {

namespace {

std::vector<Rat> sorted_unique(std::vector<Rat> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

IntervalUnion remove_points(const IntervalUnion& u, const std::vector<Rat>& pts) {
  std::vector<OpenInterval> parts;
  for (const OpenInterval& p : u.parts()) {
    Rat lo = p.lo();
    for (const Rat& x : pts) {
      if (p.contains(x)) {
        parts.emplace_back(lo, x);
        lo = x;
      }
    }
    parts.emplace_back(lo, p.hi());
  }
  return IntervalUnion(std::move(parts));
}

bool one_sided_continuous_at_origin(const PwlFunction& fn) {
  return fn.curve().continuous_at_origin_right() || fn.curve().continuous_at_origin_left();
}

}  // namespace

RefinementData refine(const PwlFunction& input, const FinitePresentation& closure) {
  PwlFunction fn = input.canonicalized();
  RefinementData ref;
  ref.C = closure.covered_set();
  ref.U = difference(IntervalUnion(OpenInterval(Rat(0), Rat(1))), ref.C);

  ref.X = boundary(ref.C);
  ref.X.push_back(Rat(0));
  ref.X.push_back(Rat(1));
  ref.X = sorted_unique(std::move(ref.X));

  Complex2D cx(fn.curve().breakpoints());
  AdditivityData add = analyze_additivity(fn, cx);
  if (!add.subadditive) throw std::logic_error("refine: function is not subadditive");
  std::vector<Rat> v;
  for (size_t vi : add.additive_vertices) {
    const Pt& p = cx.faces()[vi].verts[0];
    for (const Rat& t : {p.first, p.second, p.first + p.second}) {
      v.push_back(t.mod1());
      if (t == Rat(1) || t == Rat(2)) v.push_back(Rat(1));
    }
  }
  ref.V = sorted_unique(std::move(v));

  std::vector<Rat> y;
  for (const Rat& p : ref.V) {
    if (!ref.U.contains(p)) continue;
    y.push_back(p);
    for (const Move& m : closure.moves())
      if (m.domain().contains(p)) y.push_back(m.map(p));
  }
  ref.Y = sorted_unique(std::move(y));

  std::vector<Rat> z;
  for (const Move& m : closure.moves()) {
    if (!m.is_reflection()) continue;
    Rat fix = m.param() / Rat(2);
    if (m.domain().contains(fix) && ref.U.contains(fix)) z.push_back(fix);
  }
  ref.Z = sorted_unique(std::move(z));

  std::vector<Rat> bp = ref.X;
  bp.insert(bp.end(), ref.Y.begin(), ref.Y.end());
  bp.insert(bp.end(), ref.Z.begin(), ref.Z.end());
  bp = sorted_unique(std::move(bp));
  ref.Bprime = BreakpointSet(bp);
  ref.Uprime = remove_points(ref.U, bp);

  // The function must be piecewise linear over T.
  for (const Rat& b : fn.curve().breakpoints().points())
    if (!std::binary_search(bp.begin(), bp.end(), b))
      throw std::logic_error("refine: breakpoint " + b.str() + " missing from B'");

  // Move-invariance of X, Y, Z (a failure indicates a closure bug).
  auto closed_under_moves = [&](const std::vector<Rat>& s, const char* name) {
    for (const Rat& p : s)
      for (const Move& m : closure.moves())
        if (m.domain().contains(p) &&
            !std::binary_search(s.begin(), s.end(), m.map(p)))
          throw std::logic_error(std::string("refine: ") + name +
                                 " not closed under the presentation moves at " + p.str());
  };
  closed_under_moves(ref.X, "X");
  closed_under_moves(ref.Y, "Y");
  closed_under_moves(ref.Z, "Z");

  // Breakpoint stabilization: projections of additive vertices of Delta T
  // land in B' or in the covered set.
  Complex2D cxt(ref.Bprime);
  AdditivityData addt = analyze_additivity(fn, cxt);
  for (size_t vi : addt.additive_vertices) {
    const Pt& p = cxt.faces()[vi].verts[0];
    for (const Rat& t : {p.first, p.second, p.first + p.second}) {
      Rat tm = t.mod1();
      bool ok = std::binary_search(bp.begin(), bp.end(), tm) || ref.C.contains(tm);
      if (!ok)
        throw std::logic_error("refine: breakpoint stabilization fails at " + tm.str());
    }
  }
  return ref;
}

std::vector<UncoveredComponent> uncovered_components(const PwlFunction& fn,
                                                     const FinitePresentation& closure,
                                                     const RefinementData& ref) {
  (void)fn;
  std::vector<UncoveredComponent> out;
  const auto& cells = ref.Uprime.parts();
  if (cells.empty()) return out;
  auto cell_index = [&](const OpenInterval& iv) -> size_t {
    for (size_t i = 0; i < cells.size(); ++i)
      if (cells[i] == iv) return i;
    throw std::logic_error("uncovered_components: move domain " + iv.str() +
                           " is not a cell of T (inconsistent closure)");
  };

  FinitePresentation restricted = restrict_to(closure, ref.Uprime);
  std::vector<std::pair<size_t, size_t>> edges;  // (domain cell, image cell)
  std::vector<const Move*> edge_moves;
  for (const Move& m : restricted.moves()) {
    size_t a = cell_index(m.domain());
    size_t b = cell_index(m.image());
    edges.emplace_back(a, b);
    edge_moves.push_back(&m);
  }

  // Union-find over cells.
  std::vector<size_t> parent(cells.size());
  for (size_t i = 0; i < cells.size(); ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : edges) parent[find(a)] = find(b);

  std::map<size_t, std::vector<size_t>> classes;
  for (size_t i = 0; i < cells.size(); ++i) classes[find(i)].push_back(i);

  for (auto& [root, members] : classes) {
    UncoveredComponent comp;
    std::sort(members.begin(), members.end());
    size_t fund = members.front();
    comp.fundamental_domain = cells[fund];
    // Breadth-first composition of connecting moves from the fundamental
    // domain.
    std::map<size_t, Move> reach;
    reach.emplace(fund, Move::translation(Rat(0), cells[fund]));
    std::vector<size_t> queue{fund};
    while (!queue.empty()) {
      size_t cur = queue.back();
      queue.pop_back();
      for (size_t e = 0; e < edges.size(); ++e) {
        for (bool fwd : {true, false}) {
          size_t from = fwd ? edges[e].first : edges[e].second;
          size_t to = fwd ? edges[e].second : edges[e].first;
          if (from != cur || reach.count(to)) continue;
          Move step = fwd ? *edge_moves[e] : inverse(*edge_moves[e]);
          Move composite = compose(step, reach.at(cur));
          if (composite.domain() != cells[fund])
            throw std::logic_error("uncovered_components: connecting move does not cover the "
                                   "fundamental domain (inconsistent closure)");
          reach.emplace(to, composite);
          queue.push_back(to);
        }
      }
    }
    for (size_t m : members) {
      if (!reach.count(m))
        throw std::logic_error("uncovered_components: cell not reachable inside its class");
      comp.intervals.push_back(cells[m]);
      comp.connecting_moves.push_back(reach.at(m));
    }
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(), [](const UncoveredComponent& a, const UncoveredComponent& b) {
    return a.fundamental_domain < b.fundamental_domain;
  });
  return out;
}

namespace {

// Linear forms over the unknowns (covered slopes, uncovered slopes, jumps),
// telescoped left to right from pert(0) = 0.
struct SymbolicPerturbation {
  std::vector<Rat> pts;           // B' within [0,1]
  size_t nvars = 0;
  std::vector<RatVec> left, value, right;  // forms per node
  std::vector<long> cell_var;              // slope variable per cell

  RatVec zero() const { return RatVec(nvars, Rat(0)); }

  RatVec at(const Rat& t, int dir) const {
    Rat tm = t.mod1();
    size_t n = pts.size() - 1;
    if (tm == Rat(0)) {
      if (dir < 0) return left[n];  // left limit at 0 is the limit at 1^-
      return dir > 0 ? right[0] : value[0];
    }
    size_t lo = 0, hi = n;
    while (lo + 1 < hi) {
      size_t mid = (lo + hi) / 2;
      if (pts[mid] <= tm)
        lo = mid;
      else
        hi = mid;
    }
    if (pts[lo] == tm) {
      if (dir < 0) return left[lo];
      return dir > 0 ? right[lo] : value[lo];
    }
    RatVec form = right[lo];
    form[cell_var[lo]] += tm - pts[lo];
    return form;
  }
};

RatVec sub(RatVec a, const RatVec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

RatVec add(RatVec a, const RatVec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

PerturbationSpace finite_dim_space(const PwlFunction& input, const RefinementData& ref,
                                   const FinitePresentation& closure) {
  PwlFunction fn = input.canonicalized();
  if (!one_sided_continuous_at_origin(fn))
    throw UnsupportedFunction("two-sided discontinuous at the origin");

  PerturbationSpace space;
  space.components = uncovered_components(fn, closure, ref);

  const std::vector<Rat>& pts = ref.Bprime.points();
  size_t n = pts.size() - 1;
  const auto& comps = closure.components();
  size_t k = comps.size();
  size_t l = space.components.size();

  // Jump variables: one per one-sided discontinuity of pi on the circle.
  // Key: (node index, side), with the pair at the seam (left of 1, right
  // of 0) shared between node 0 and node n.
  std::map<std::pair<size_t, int>, long> jump_var;
  std::vector<std::string> names;
  for (size_t i = 0; i < k; ++i) names.push_back("s_c" + std::to_string(i + 1));
  for (size_t i = 0; i < l; ++i) names.push_back("s_u" + std::to_string(i + 1));
  long nv = static_cast<long>(k + l);
  for (size_t j = 0; j <= n; ++j) {
    LimitTriple t = fn.limits(pts[j]);
    size_t node = (j == n) ? n : j;
    if (t.left != t.value) {
      auto key = std::make_pair(node == 0 ? n : node, -1);
      if (!jump_var.count(key)) {
        jump_var[key] = nv++;
        names.push_back("d" + pts[key.first == n ? n : key.first].str() + "-");
      }
    }
    if (t.right != t.value) {
      auto key = std::make_pair(node == n ? size_t(0) : node, +1);
      if (!jump_var.count(key)) {
        jump_var[key] = nv++;
        names.push_back("d" + pts[key.first].str() + "+");
      }
    }
  }
  space.variable_names = names;

  SymbolicPerturbation sym;
  sym.pts = pts;
  sym.nvars = static_cast<size_t>(nv);
  sym.cell_var.assign(n, -1);
  for (size_t j = 0; j < n; ++j) {
    OpenInterval cell(pts[j], pts[j + 1]);
    long var = -1;
    for (size_t i = 0; i < k && var < 0; ++i)
      for (const auto& part : comps[i].parts())
        if (part.contains(cell)) {
          var = static_cast<long>(i);
          break;
        }
    for (size_t i = 0; i < l && var < 0; ++i)
      for (const auto& iv : space.components[i].intervals)
        if (iv == cell) {
          var = static_cast<long>(k + i);
          break;
        }
    if (var < 0)
      throw std::logic_error("finite_dim_space: cell " + cell.str() +
                             " is neither covered nor in an uncovered component");
    sym.cell_var[j] = var;
  }

  auto jump_form = [&](size_t node, int side) {
    RatVec f(sym.nvars, Rat(0));
    auto it = jump_var.find({node, side});
    if (it != jump_var.end()) f[it->second] = Rat(1);
    return f;
  };

  sym.left.assign(n + 1, sym.zero());
  sym.value.assign(n + 1, sym.zero());
  sym.right.assign(n + 1, sym.zero());
  sym.value[0] = sym.zero();
  sym.right[0] = add(sym.value[0], jump_form(0, +1));
  for (size_t j = 0; j < n; ++j) {
    RatVec f = sym.right[j];
    f[sym.cell_var[j]] += pts[j + 1] - pts[j];
    sym.left[j + 1] = f;
    sym.value[j + 1] = add(sym.left[j + 1], jump_form(j + 1, -1));
    sym.right[j + 1] = add(sym.value[j + 1], jump_form(j + 1 == n ? 0 : j + 1, +1));
  }
  sym.left[0] = sym.left[n];

  std::set<RatVec> rows;
  auto add_row = [&](const RatVec& r) {
    if (std::any_of(r.begin(), r.end(), [](const Rat& x) { return x != Rat(0); }))
      rows.insert(r);
  };
  add_row(sym.value[n]);          // pert(1) = pert(0) = 0
  add_row(sym.at(fn.f(), 0));     // pert(f) = 0

  Complex2D cxt(ref.Bprime);
  for (const Face2D& face : cxt.faces()) {
    for (const Pt& v : face.verts) {
      if (delta_pi_limit(fn, face, v) != Rat(0)) continue;
      std::array<int, 3> s = approach_signs(face, v);
      RatVec row = sub(add(sym.at(v.first, s[0]), sym.at(v.second, s[1])),
                       sym.at(v.first + v.second, s[2]));
      add_row(row);
    }
  }

  RatMat m(rows.begin(), rows.end());
  space.slope_jump_solution = nullspace_basis(std::move(m), sym.nvars);

  for (const RatVec& coords : space.slope_jump_solution) {
    auto inst = [&](const RatVec& form) {
      Rat acc(0);
      for (size_t i = 0; i < form.size(); ++i) acc += form[i] * coords[i];
      return acc;
    };
    std::vector<LimitTriple> triples;
    triples.reserve(n + 1);
    for (size_t j = 0; j <= n; ++j) {
      triples.push_back(LimitTriple{inst(j == 0 ? sym.left[n] : sym.left[j]), inst(sym.value[j]),
                                    inst(j == n ? sym.right[0] : sym.right[j])});
    }
    if (triples.back().value != Rat(0) || triples.front().value != Rat(0))
      throw std::logic_error("finite_dim_space: reconstruction failed to vanish at 0");
    triples.back() = LimitTriple{triples.back().left, triples.front().value,
                                 triples.front().right};
    space.finite_basis.emplace_back(
        PiecewiseCurve(ref.Bprime, std::move(triples)));
  }
  return space;
}

PerturbationFn equivariant_sample(const UncoveredComponent& comp, const Rat& height) {
  if (comp.intervals.empty())
    throw std::invalid_argument("equivariant_sample: degenerate component");
  Rat mid = comp.fundamental_domain.midpoint();
  std::map<Rat, Rat> pointvals;
  pointvals[Rat(0)] = Rat(0);
  pointvals[Rat(1)] = Rat(0);
  for (size_t j = 0; j < comp.intervals.size(); ++j) {
    const Move& g = comp.connecting_moves[j];
    const OpenInterval& iv = comp.intervals[j];
    pointvals[iv.lo()] = Rat(0);
    pointvals[iv.hi()] = Rat(0);
    pointvals[g.map(mid)] = Rat(g.chi()) * height;
  }
  std::vector<Rat> xs, vs;
  for (auto& [x, v] : pointvals) {
    xs.push_back(x);
    vs.push_back(v);
  }
  return PerturbationFn(PiecewiseCurve::interpolate(std::move(xs), std::move(vs)));
}

EpsilonResult epsilon_for(const PwlFunction& input, const PerturbationFn& pert) {
  PwlFunction fn = input.canonicalized();
  if (pert.eval(Rat(0)) != Rat(0) || pert.eval(fn.f()) != Rat(0))
    throw std::invalid_argument("epsilon_for: perturbation must vanish at 0 and f");

  std::vector<Rat> bp = fn.curve().breakpoints().points();
  const auto& bq = pert.curve().breakpoints().points();
  bp.insert(bp.end(), bq.begin(), bq.end());
  bp.push_back(fn.f());
  bp = sorted_unique(std::move(bp));
  BreakpointSet merged(bp);

  std::optional<Rat> best;
  auto bound = [&](const Rat& num, const Rat& den) {
    Rat b = num / den.abs();
    if (!best || b < *best) best = b;
  };

  Complex2D cx(merged);
  for (const Face2D& face : cx.faces()) {
    for (const Pt& v : face.verts) {
      Rat a = delta_pi_limit(fn, face, v);
      Rat b = delta_limit(pert.curve(), face, v);
      if (a == Rat(0)) {
        if (b != Rat(0))
          return EpsilonResult{Rat(0), false,
                               "perturbation breaks a tight additivity at (" + v.first.str() +
                                   "," + v.second.str() + ")"};
      } else if (b != Rat(0)) {
        bound(a, b);
      }
    }
  }
  for (const Rat& x : bp) {
    LimitTriple tp = fn.limits(x);
    LimitTriple tq = pert.limits(x);
    const Rat* ps[3] = {&tp.left, &tp.value, &tp.right};
    const Rat* qs[3] = {&tq.left, &tq.value, &tq.right};
    for (int i = 0; i < 3; ++i) {
      if (*qs[i] == Rat(0)) continue;
      if (*ps[i] == Rat(0) || *ps[i] == Rat(1))
        return EpsilonResult{Rat(0), false,
                             "perturbation moves the function off its bounds at " + x.str()};
      bound(*ps[i], *qs[i]);
      bound(Rat(1) - *ps[i], *qs[i]);
    }
  }

  Rat eps = best ? *best : Rat(1);
  if (eps == Rat(0)) return EpsilonResult{Rat(0), false, "zero slack ratio"};
  for (const Rat& sign : {Rat(1), Rat(-1)}) {
    MinimalityReport rep = check_minimality(perturbed(fn, sign * eps, pert));
    if (!rep.minimal)
      throw std::logic_error("epsilon_for: verification failed (" + rep.reason +
                             ") despite positive slack bound");
  }
  return EpsilonResult{eps, true, ""};
}

std::pair<PerturbationFn, PerturbationFn> decompose(const PwlFunction& fn,
                                                    const RefinementData& ref,
                                                    const PerturbationFn& pert) {
  const std::vector<Rat>& pts = ref.Bprime.points();
  std::vector<LimitTriple> triples;
  triples.reserve(pts.size());
  for (const Rat& x : pts) triples.push_back(pert.limits(x));
  PerturbationFn t_part(PiecewiseCurve(ref.Bprime, std::move(triples)));
  PerturbationFn zero_part = linear_combine({{Rat(1), &pert}, {Rat(-1), &t_part}});
  for (const Rat& x : pts) {
    LimitTriple t = zero_part.limits(x);
    if (!(t.left == Rat(0) && t.value == Rat(0) && t.right == Rat(0)))
      throw std::logic_error("decompose: remainder does not vanish at vertex " + x.str());
  }
  for (const PerturbationFn* part : {&t_part, &zero_part}) {
    if (part->is_zero()) continue;
    EpsilonResult er = epsilon_for(fn, *part);
    if (!er.effective)
      throw std::logic_error("decompose: summand is not an effective perturbation: " +
                             er.diagnostic);
  }
  return {std::move(t_part), std::move(zero_part)};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Extreme: return "extreme";
    case Verdict::NotExtreme: return "not_extreme";
    default: return "unsupported";
  }
}

ExtremalityReport extremality_test(const PwlFunction& input, const ClosureOptions& opts) {
  ExtremalityReport rep;
  PwlFunction fn = input.canonicalized();
  rep.minimality = check_minimality(fn);
  if (!rep.minimality.minimal) {
    rep.verdict = Verdict::Unsupported;
    rep.reason = "not minimal: " + rep.minimality.reason;
    return rep;
  }
  FinitePresentation initial = initial_ensemble(fn);
  rep.closure = moves_closure(initial, opts);
  if (rep.closure->budget_exhausted) {
    rep.verdict = Verdict::Unsupported;
    rep.reason = "closure budget exhausted";
    return rep;
  }
  const FinitePresentation& cl = rep.closure->presentation;
  rep.refinement = refine(fn, cl);
  rep.components = uncovered_components(fn, cl, *rep.refinement);
  if (!one_sided_continuous_at_origin(fn)) {
    rep.verdict = Verdict::Unsupported;
    rep.reason = "two-sided discontinuous at the origin";
    return rep;
  }
  rep.space = finite_dim_space(fn, *rep.refinement, cl);
  if (!rep.space->finite_basis.empty()) {
    rep.witness = rep.space->finite_basis.front();
  } else if (!rep.components.empty()) {
    rep.witness = equivariant_sample(rep.components.front(), Rat(1));
  }
  if (rep.witness) {
    EpsilonResult er = epsilon_for(fn, *rep.witness);
    if (!er.effective)
      throw std::logic_error("extremality_test: witness rejected: " + er.diagnostic);
    rep.epsilon = er.eps;
    rep.verdict = Verdict::NotExtreme;
  } else {
    rep.verdict = Verdict::Extreme;
  }
  return rep;
}

}  // namespace groupcut
