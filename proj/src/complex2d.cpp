#include "groupcut/complex2d.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace groupcut {

namespace {

Rat cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.first - o.first) * (b.second - o.second) -
         (a.second - o.second) * (b.first - o.first);
}

// Clip a convex loop (possibly degenerate) by the halfplane h(p) >= 0,
// h(p) = sx*x + sy*y + c.
std::vector<Pt> clip_halfplane(const std::vector<Pt>& poly, const Rat& sx, const Rat& sy,
                               const Rat& c) {
  auto h = [&](const Pt& p) { return sx * p.first + sy * p.second + c; };
  if (poly.empty()) return {};
  if (poly.size() == 1) return h(poly[0]) >= Rat(0) ? poly : std::vector<Pt>{};
  if (poly.size() == 2) {
    Rat h0 = h(poly[0]), h1 = h(poly[1]);
    if (h0 >= Rat(0) && h1 >= Rat(0)) return poly;
    if (h0 < Rat(0) && h1 < Rat(0)) return {};
    Rat t = h0 / (h0 - h1);
    Pt m{poly[0].first + t * (poly[1].first - poly[0].first),
         poly[0].second + t * (poly[1].second - poly[0].second)};
    if (h0 >= Rat(0)) return {poly[0], m};
    return {m, poly[1]};
  }
  std::vector<Pt> out;
  for (size_t i = 0; i < poly.size(); ++i) {
    const Pt& cur = poly[i];
    const Pt& nxt = poly[(i + 1) % poly.size()];
    Rat hc = h(cur), hn = h(nxt);
    if (hc >= Rat(0)) out.push_back(cur);
    if ((hc > Rat(0) && hn < Rat(0)) || (hc < Rat(0) && hn > Rat(0))) {
      Rat t = hc / (hc - hn);
      out.push_back(Pt{cur.first + t * (nxt.first - cur.first),
                       cur.second + t * (nxt.second - cur.second)});
    }
  }
  return out;
}

// Canonical corner list: CCW, no duplicates, no collinear middle points,
// lexicographically smallest vertex first; degenerate loops collapse to a
// segment or point.
std::vector<Pt> cleanup(std::vector<Pt> poly) {
  std::sort(poly.begin(), poly.end());
  poly.erase(std::unique(poly.begin(), poly.end()), poly.end());
  if (poly.size() <= 2) return poly;
  bool collinear = true;
  for (size_t i = 2; i < poly.size() && collinear; ++i)
    if (cross(poly[0], poly[1], poly[i]) != Rat(0)) collinear = false;
  if (collinear) return {poly.front(), poly.back()};  // sorted: extremes
  // Convex hull (monotone chain) gives CCW corners without collinear points.
  std::vector<Pt> hull;
  auto build = [&](auto begin, auto end) {
    size_t base = hull.size();
    for (auto it = begin; it != end; ++it) {
      while (hull.size() >= base + 2 &&
             cross(hull[hull.size() - 2], hull[hull.size() - 1], *it) <= Rat(0))
        hull.pop_back();
      hull.push_back(*it);
    }
    hull.pop_back();
  };
  build(poly.begin(), poly.end());
  build(poly.rbegin(), poly.rend());
  return hull;  // starts at lexicographically smallest point
}

std::vector<Pt> face_geometry(const Cell1& I, const Cell1& J, const Cell1& K) {
  std::vector<Pt> poly;
  if (I.is_vertex() && J.is_vertex()) {
    poly = {Pt{I.lo, J.lo}};
  } else if (I.is_vertex()) {
    poly = {Pt{I.lo, J.lo}, Pt{I.lo, J.hi}};
  } else if (J.is_vertex()) {
    poly = {Pt{I.lo, J.lo}, Pt{I.hi, J.lo}};
  } else {
    poly = {Pt{I.lo, J.lo}, Pt{I.hi, J.lo}, Pt{I.hi, J.hi}, Pt{I.lo, J.hi}};
  }
  poly = clip_halfplane(poly, Rat(1), Rat(1), -K.lo);   // x + y >= K.lo
  poly = clip_halfplane(poly, Rat(-1), Rat(-1), K.hi);  // x + y <= K.hi
  return cleanup(std::move(poly));
}

}  // namespace

Pt Face2D::centroid() const {
  Rat cx(0), cy(0);
  for (const auto& v : verts) {
    cx += v.first;
    cy += v.second;
  }
  Rat n(static_cast<long>(verts.size()));
  return {cx / n, cy / n};
}

bool Face2D::contains(const Pt& p) const {
  if (dim == 0) return p == verts[0];
  if (dim == 1) {
    const Pt& a = verts[0];
    const Pt& b = verts[1];
    if (cross(a, b, p) != Rat(0)) return false;
    Rat lo_x = std::min(a.first, b.first), hi_x = std::max(a.first, b.first);
    Rat lo_y = std::min(a.second, b.second), hi_y = std::max(a.second, b.second);
    return lo_x <= p.first && p.first <= hi_x && lo_y <= p.second && p.second <= hi_y;
  }
  for (size_t i = 0; i < verts.size(); ++i)
    if (cross(verts[i], verts[(i + 1) % verts.size()], p) < Rat(0)) return false;
  return true;
}

Complex2D::Complex2D(const BreakpointSet& b) : bkpts_(b) {
  const auto& xs = b.points();
  size_t n = xs.size() - 1;
  std::vector<Cell1> cells;  // cells and vertices of P_B within [0,1]
  for (size_t i = 0; i <= n; ++i) cells.push_back(Cell1{xs[i], xs[i]});
  for (size_t i = 0; i < n; ++i) cells.push_back(Cell1{xs[i], xs[i + 1]});
  std::vector<Cell1> kcells;  // within [0,2]
  std::vector<Rat> kpts;      // 0, ..., 2
  for (size_t i = 0; i <= n; ++i) kpts.push_back(xs[i]);
  for (size_t i = 1; i <= n; ++i) kpts.push_back(xs[i] + Rat(1));
  for (const Rat& p : kpts) kcells.push_back(Cell1{p, p});
  for (size_t i = 0; i + 1 < kpts.size(); ++i) kcells.push_back(Cell1{kpts[i], kpts[i + 1]});

  std::map<std::vector<Pt>, size_t> seen;
  for (const Cell1& I : cells)
    for (const Cell1& J : cells) {
      Rat slo = I.lo + J.lo, shi = I.hi + J.hi;
      for (const Cell1& K : kcells) {
        if (K.hi < slo || K.lo > shi) continue;
        std::vector<Pt> geom = face_geometry(I, J, K);
        if (geom.empty()) continue;
        if (seen.emplace(geom, faces_.size()).second) {
          Face2D f;
          f.I = I;
          f.J = J;
          f.K = K;
          f.dim = geom.size() == 1 ? 0 : (geom.size() == 2 ? 1 : 2);
          f.verts = std::move(geom);
          faces_.push_back(std::move(f));
        }
      }
    }
  for (size_t i = 0; i < faces_.size(); ++i) by_dim_[faces_[i].dim].push_back(i);
}

std::vector<size_t> Complex2D::faces_containing(const Pt& p) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].contains(p)) out.push_back(i);
  return out;
}

Rat delta_pi(const PwlFunction& fn, const Rat& x, const Rat& y) {
  return fn.eval(x) + fn.eval(y) - fn.eval(x + y);
}

std::array<int, 3> approach_signs(const Face2D& face, const Pt& vertex) {
  if (!face.contains(vertex))
    throw std::invalid_argument("approach_signs: vertex not on face");
  Pt c = face.centroid();
  Rat dx = c.first - vertex.first;
  Rat dy = c.second - vertex.second;
  return {dx.sign(), dy.sign(), (dx + dy).sign()};
}

Rat delta_limit(const PiecewiseCurve& curve, const Face2D& face, const Pt& vertex) {
  std::array<int, 3> s = approach_signs(face, vertex);
  return curve.limit_at(vertex.first, s[0]) + curve.limit_at(vertex.second, s[1]) -
         curve.limit_at(vertex.first + vertex.second, s[2]);
}

Rat delta_pi_limit(const PwlFunction& fn, const Face2D& face, const Pt& vertex) {
  return delta_limit(fn.curve(), face, vertex);
}

AdditivityData analyze_additivity(const PwlFunction& fn, const Complex2D& cx) {
  AdditivityData out;
  const auto& faces = cx.faces();
  out.face_additive.assign(faces.size(), 0);
  for (size_t i = 0; i < faces.size(); ++i) {
    bool all_zero = true;
    for (const Pt& v : faces[i].verts) {
      Rat val = delta_pi_limit(fn, faces[i], v);
      if (val < Rat(0)) {
        out.subadditive = false;
        out.violation = SubadditivityViolation{i, v, val};
        return out;
      }
      if (val != Rat(0)) all_zero = false;
    }
    out.face_additive[i] = all_zero;
  }
  for (size_t vi : cx.faces_of_dim(0)) {
    const Pt& v = faces[vi].verts[0];
    bool additive = out.face_additive[vi];
    if (!additive) {
      for (size_t fi : cx.faces_containing(v)) {
        if (delta_pi_limit(fn, faces[fi], v) == Rat(0)) {
          additive = true;
          break;
        }
      }
    }
    if (additive) out.additive_vertices.push_back(vi);
  }
  for (size_t fi : cx.faces_of_dim(2)) {
    const Face2D& f = faces[fi];
    for (size_t ei : cx.faces_of_dim(1)) {
      const Face2D& e = faces[ei];
      if (!f.contains(e.verts[0]) || !f.contains(e.verts[1])) continue;
      if (delta_pi_limit(fn, f, e.verts[0]) == Rat(0) &&
          delta_pi_limit(fn, f, e.verts[1]) == Rat(0))
        out.limit_additive_edges.emplace_back(ei, fi);
    }
  }
  return out;
}

std::vector<Face2D> additive_faces(const PwlFunction& fn, const Complex2D& cx) {
  AdditivityData data = analyze_additivity(fn, cx);
  if (!data.subadditive) {
    const auto& v = data.violation->vertex;
    throw std::domain_error("additive_faces: function is not subadditive at (" +
                            v.first.str() + "," + v.second.str() + "), slack " +
                            data.violation->value.str());
  }
  std::vector<Face2D> out;
  for (size_t i = 0; i < cx.faces().size(); ++i)
    if (data.face_additive[i]) out.push_back(cx.faces()[i]);
  return out;
}

namespace {

// Intersection of a face with the line x + y = c: empty, a point, or a
// segment, as a (possibly degenerate) corner list.
std::vector<Pt> diagonal_section(const Face2D& face, const Rat& c) {
  std::vector<Pt> poly = face.verts;
  poly = clip_halfplane(poly, Rat(1), Rat(1), -c);
  poly = clip_halfplane(poly, Rat(-1), Rat(-1), c);
  return cleanup(std::move(poly));
}

}  // namespace

MinimalityReport check_minimality(const PwlFunction& input) {
  PwlFunction fn = input.canonicalized();
  MinimalityReport rep;
  if (fn.eval(Rat(0)) != Rat(0)) {
    rep.reason = "pi(0) != 0";
    rep.witness = Pt{Rat(0), Rat(0)};
    return rep;
  }
  if (fn.eval(fn.f()) != Rat(1)) {
    rep.reason = "pi(f) != 1";
    rep.witness = Pt{fn.f(), Rat(0)};
    return rep;
  }
  const auto& xs = fn.curve().breakpoints().points();
  for (size_t i = 0; i < xs.size(); ++i) {
    const LimitTriple& t = fn.curve().triples()[i];
    for (const Rat& v : {t.left, t.value, t.right}) {
      if (v < Rat(0) || v > Rat(1)) {
        rep.reason = "range violation: pi not within [0,1]";
        rep.witness = Pt{xs[i], v};
        return rep;
      }
    }
  }
  Complex2D cx(fn.curve().breakpoints());
  AdditivityData add = analyze_additivity(fn, cx);
  if (!add.subadditive) {
    rep.reason = "subadditivity violated";
    rep.witness = add.violation->vertex;
    return rep;
  }
  // Symmetry condition: Delta pi vanishes pointwise on x+y in {f, 1+f}.
  for (const Rat& c : {fn.f(), fn.f() + Rat(1)}) {
    for (const Face2D& face : cx.faces()) {
      std::vector<Pt> sec = diagonal_section(face, c);
      if (sec.empty()) continue;
      std::vector<Pt> probes = sec;
      if (sec.size() == 2) {
        for (const Rat& t : {Rat(1, 3), Rat(2, 3)}) {
          probes.push_back(Pt{sec[0].first + t * (sec[1].first - sec[0].first),
                              sec[0].second + t * (sec[1].second - sec[0].second)});
        }
      }
      for (const Pt& p : probes) {
        if (delta_pi(fn, p.first, p.second) != Rat(0)) {
          rep.reason = "symmetry condition violated";
          rep.witness = p;
          return rep;
        }
      }
    }
  }
  rep.minimal = true;
  return rep;
}

}  // namespace groupcut
