#include "groupcut/closure.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace groupcut {

namespace {

IntervalUnion map_image(const Move& m, const IntervalUnion& u) {
  return m.is_translation() ? translate(u, m.param()) : reflect(u, m.param());
}

// Intersect a raw domain with A and gamma^{-1}(A) and emit one move per
// remaining part.
void emit_trimmed(std::vector<Move>& out, int chi, const Rat& param, const OpenInterval& dom,
                  const IntervalUnion& a) {
  if (dom.is_empty()) return;
  IntervalUnion pre = chi == 1 ? translate(a, -param) : reflect(a, param);
  IntervalUnion trimmed = intersect(intersect(IntervalUnion(dom), a), pre);
  for (const OpenInterval& part : trimmed.parts())
    out.push_back(chi == 1 ? Move::translation(param, part) : Move::reflection(param, part));
}

// Moves carried by a 1-D additive or limit-additive face of Delta P.
void moves_from_edge(std::vector<Move>& out, const Face2D& edge, const IntervalUnion& a) {
  const Pt& p0 = edge.verts[0];
  const Pt& p1 = edge.verts[1];
  if (p0.second == p1.second) {  // horizontal: x -> x + y0
    OpenInterval dom(std::min(p0.first, p1.first), std::max(p0.first, p1.first));
    for (const Move& m : wrap_translation(p0.second, dom))
      emit_trimmed(out, 1, m.param(), m.domain(), a);
  } else if (p0.first == p1.first) {  // vertical: y -> y + x0
    OpenInterval dom(std::min(p0.second, p1.second), std::max(p0.second, p1.second));
    for (const Move& m : wrap_translation(p0.first, dom))
      emit_trimmed(out, 1, m.param(), m.domain(), a);
  } else {  // diagonal: x -> r - x
    Rat r = p0.first + p0.second;
    if (r != p1.first + p1.second)
      throw std::logic_error("moves_from_edge: edge is not grid-aligned");
    OpenInterval dom(std::min(p0.first, p1.first), std::max(p0.first, p1.first));
    emit_trimmed(out, -1, r, dom, a);
  }
}

Rat range_min(const std::vector<Rat>& v) { return *std::min_element(v.begin(), v.end()); }
Rat range_max(const std::vector<Rat>& v) { return *std::max_element(v.begin(), v.end()); }

// Connected covered component contributed by a 2-D additive face: the three
// projections, reduced mod 1 and intersected with the continuity set.
IntervalUnion component_from_face(const Face2D& f, const IntervalUnion& a) {
  std::vector<Rat> xs, ys, ss;
  for (const Pt& v : f.verts) {
    xs.push_back(v.first);
    ys.push_back(v.second);
    ss.push_back(v.first + v.second);
  }
  std::vector<OpenInterval> parts;
  parts.emplace_back(range_min(xs), range_max(xs));
  parts.emplace_back(range_min(ys), range_max(ys));
  Rat slo = range_min(ss), shi = range_max(ss);
  if (slo >= Rat(1)) {
    parts.emplace_back(slo - Rat(1), shi - Rat(1));
  } else {
    parts.emplace_back(slo, shi);  // K is a single cell, so no straddle of 1
  }
  return intersect(IntervalUnion(std::move(parts)), a);
}

// Least grid denominator covering every endpoint and parameter of the
// presentation.
mpz_class grid_denominator(const FinitePresentation& p) {
  std::vector<Rat> data;
  for (const Move& m : p.moves()) {
    data.push_back(m.param());
    data.push_back(m.domain().lo());
    data.push_back(m.domain().hi());
  }
  for (const auto& c : p.components())
    for (const auto& part : c.parts()) {
      data.push_back(part.lo());
      data.push_back(part.hi());
    }
  for (const auto& part : p.continuity().parts()) {
    data.push_back(part.lo());
    data.push_back(part.hi());
  }
  return common_denominator(data);
}

bool on_grid(const Rat& x, const mpz_class& q) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), mpz_class(x.num() * q).get_mpz_t(), x.den().get_mpz_t());
  return r == 0;
}

// Saturation of the structural rules: merge components (overlap and
// move-linked), merge touching component parts at continuity points, grow
// components by images of moves entering them, then recompute the reduced
// extended move slices.
FinitePresentation normalize(FinitePresentation p, std::vector<std::string>* log) {
  for (;;) {
    FinitePresentation before = p;
    p = merge_components(p);
    p = merge_component_parts_by_continuity(p);
    // Extend components by moves overlapping them.
    std::vector<IntervalUnion> comps = p.components();
    bool grew = false;
    for (const Move& m : p.moves()) {
      for (auto& c : comps) {
        IntervalUnion g = intersect(IntervalUnion(m.domain()), c);
        if (g.is_empty()) continue;
        IntervalUnion img = map_image(m, g);
        if (!c.contains(img)) {
          c = union_of(c, img);
          grew = true;
        }
      }
    }
    if (grew) {
      if (log) log->push_back("extend components by move images");
      p = FinitePresentation(p.moves(), std::move(comps), p.continuity());
    }
    p = extend_moves_by_continuity(p);  // join + extend + reduce per slice
    if (canonical_eq(p, before)) return p;
  }
}

}  // namespace

FinitePresentation initial_ensemble(const PwlFunction& input) {
  PwlFunction fn = input.canonicalized();
  MinimalityReport min = check_minimality(fn);
  if (!min.minimal)
    throw std::domain_error("initial_ensemble: function is not minimal: " + min.reason);
  IntervalUnion a = fn.continuity_set();
  Complex2D cx(fn.curve().breakpoints());
  AdditivityData add = analyze_additivity(fn, cx);

  std::set<size_t> move_edges;
  for (size_t ei : cx.faces_of_dim(1))
    if (add.face_additive[ei]) move_edges.insert(ei);
  for (const auto& [ei, fi] : add.limit_additive_edges) move_edges.insert(ei);

  std::vector<Move> moves;
  for (size_t ei : move_edges) moves_from_edge(moves, cx.faces()[ei], a);
  size_t n = moves.size();
  for (size_t i = 0; i < n; ++i) moves.push_back(inverse(moves[i]));

  std::vector<IntervalUnion> comps;
  for (size_t fi : cx.faces_of_dim(2))
    if (add.face_additive[fi]) comps.push_back(component_from_face(cx.faces()[fi], a));

  FinitePresentation p(std::move(moves), std::move(comps), a);
  p = merge_components(p);
  return reduce(p);
}

ClosureResult moves_closure(const FinitePresentation& input, const ClosureOptions& opts) {
  std::vector<std::string> log;
  std::vector<Move> with_inv = input.moves();
  for (const Move& m : input.moves()) with_inv.push_back(inverse(m));
  FinitePresentation p(std::move(with_inv), input.components(), input.continuity());
  p = normalize(std::move(p), &log);

  mpz_class q = grid_denominator(input);
  long budget = opts.budget;
  if (budget <= 0) {
    mpz_class b = 10 * q * q;
    budget = b.fits_slong_p() ? b.get_si() : std::numeric_limits<long>::max();
  }

  ClosureResult result{p, {}, false, 0};
  Rat prev_covered = p.covered_set().total_length();
  for (long round = 1;; ++round) {
    std::vector<Move> fresh;
    const auto& ms = result.presentation.moves();
    for (const Move& outer : ms)
      for (const Move& inner : ms) {
        Move c = compose(outer, inner);
        if (c.is_empty() || joined_membership(result.presentation, c)) continue;
        fresh.push_back(c);
        fresh.push_back(inverse(c));
      }
    if (fresh.empty()) break;
    if (round > budget) {
      result.budget_exhausted = true;
      log.push_back("budget exhausted after " + std::to_string(budget) + " rounds");
      break;
    }
    if (opts.reverse_worklist) std::reverse(fresh.begin(), fresh.end());
    for (const Move& m : fresh) {
      if (!on_grid(m.param(), q) || !on_grid(m.domain().lo(), q) || !on_grid(m.domain().hi(), q)) {
        ++result.promotion_count;  // off-grid behavior; unreachable on rational input
        log.push_back("off-grid move " + m.str());
      }
    }
    std::vector<Move> all = result.presentation.moves();
    all.insert(all.end(), fresh.begin(), fresh.end());
    result.presentation = normalize(
        FinitePresentation(std::move(all), result.presentation.components(),
                           result.presentation.continuity()),
        &log);
    Rat covered = result.presentation.covered_set().total_length();
    if (covered < prev_covered)
      throw std::logic_error("moves_closure: covered length decreased");
    prev_covered = covered;
    log.push_back("round " + std::to_string(round) + ": +" + std::to_string(fresh.size() / 2) +
                  " compositions, covered length " + covered.str());
  }
  // The fixpoint is inverse-closed.
  for (const Move& m : result.presentation.moves())
    if (!joined_membership(result.presentation, inverse(m)))
      throw std::logic_error("moves_closure: fixpoint not inverse-closed");
  result.steps = std::move(log);
  return result;
}

bool respects_check(const PiecewiseCurve& theta, const FinitePresentation& p, int samples) {
  for (const Move& m : p.moves()) {
    const Rat& l = m.domain().lo();
    const Rat& u = m.domain().hi();
    Rat chi(m.chi());
    // Constant from the endpoint limits, approached from inside the domain.
    Rat c_lo = theta.limit_at(m.map(l), m.chi()) - chi * theta.limit_at(l, +1);
    Rat c_hi = theta.limit_at(m.map(u), -m.chi()) - chi * theta.limit_at(u, -1);
    if (c_lo != c_hi) return false;
    for (int k = 1; k <= samples; ++k) {
      Rat x = l + (u - l) * Rat(k, samples + 1);
      if (theta.eval(m.map(x)) - chi * theta.eval(x) != c_lo) return false;
    }
  }
  for (const auto& comp : p.components()) {
    bool have_slope = false;
    Rat slope(0);
    for (const auto& part : comp.parts()) {
      Rat va = theta.limit_at(part.lo(), +1);
      Rat vb = theta.limit_at(part.hi(), -1);
      Rat s = (vb - va) / (part.hi() - part.lo());
      if (!have_slope) {
        slope = s;
        have_slope = true;
      } else if (s != slope) {
        return false;
      }
      // Affine across the whole part: every interior breakpoint of theta
      // sits on the chord, with matching one-sided limits.
      for (const Rat& t : theta.breakpoints().points()) {
        if (!part.contains(t)) continue;
        Rat line = va + s * (t - part.lo());
        LimitTriple lt = theta.limits(t);
        if (lt.left != line || lt.value != line || lt.right != line) return false;
      }
    }
  }
  return true;
}

}  // namespace groupcut
