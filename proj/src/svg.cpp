#include "groupcut/svg.hpp"

#include <sstream>

#include "groupcut/closure.hpp"

namespace groupcut {

namespace {

constexpr double kSize = 560.0;
constexpr double kMargin = 40.0;

double sx(double x) { return kMargin + x * (kSize - 2 * kMargin); }
double sy(double y) { return kSize - kMargin - y * (kSize - 2 * kMargin); }

std::string num(double v) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << v;
  return os.str();
}

void line(std::ostream& os, double x1, double y1, double x2, double y2, const char* color,
          double width = 1.5) {
  os << "<line x1='" << num(sx(x1)) << "' y1='" << num(sy(y1)) << "' x2='" << num(sx(x2))
     << "' y2='" << num(sy(y2)) << "' stroke='" << color << "' stroke-width='" << width
     << "'/>\n";
}

void dot(std::ostream& os, double x, double y, bool hollow, const char* color) {
  os << "<circle cx='" << num(sx(x)) << "' cy='" << num(sy(y)) << "' r='3' stroke='" << color
     << "' fill='" << (hollow ? "white" : color) << "'/>\n";
}

std::string header() {
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kSize << "' height='" << kSize
     << "' viewBox='0 0 " << kSize << " " << kSize << "'>\n"
     << "<rect width='100%' height='100%' fill='white'/>\n";
  return os.str();
}

void frame(std::ostream& os) {
  line(os, 0, 0, 1, 0, "#888", 1.0);
  line(os, 0, 0, 0, 1, "#888", 1.0);
  line(os, 1, 0, 1, 1, "#888", 1.0);
  line(os, 0, 1, 1, 1, "#888", 1.0);
}

void draw_curve(std::ostream& os, const PiecewiseCurve& c, const char* color) {
  const auto& xs = c.breakpoints().points();
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    double a = xs[i].to_double();
    double b = xs[i + 1].to_double();
    double va = c.triples()[i].right.to_double();
    double vb = c.triples()[i + 1].left.to_double();
    line(os, a, va, b, vb, color);
  }
  for (size_t i = 0; i < xs.size(); ++i) {
    const LimitTriple& t = c.triples()[i];
    double x = xs[i].to_double();
    if (t.is_continuous()) continue;
    if (t.left != t.value) dot(os, x, t.left.to_double(), true, color);
    if (t.right != t.value) dot(os, x, t.right.to_double(), true, color);
    dot(os, x, t.value.to_double(), false, color);
  }
}

const char* kPalette[] = {"#c9a227", "#7fbf7f", "#7f9fbf", "#bf7fbf", "#bfbf7f", "#7fbfbf"};

}  // namespace

std::string svg_function(const PwlFunction& fn, const PerturbationFn* witness) {
  std::ostringstream os;
  os << header();
  frame(os);
  draw_curve(os, fn.curve(), "#1f4e9c");
  if (witness) draw_curve(os, witness->curve(), "#b03030");
  os << "</svg>\n";
  return os.str();
}

std::string svg_complex(const PwlFunction& fn) {
  PwlFunction f = fn.canonicalized();
  Complex2D cx(f.curve().breakpoints());
  AdditivityData add = analyze_additivity(f, cx);
  std::ostringstream os;
  os << header();
  // Additive 2-D faces shaded.
  for (size_t fi : cx.faces_of_dim(2)) {
    if (!add.face_additive[fi]) continue;
    os << "<polygon points='";
    for (const Pt& v : cx.faces()[fi].verts)
      os << num(sx(v.first.to_double())) << "," << num(sy(v.second.to_double())) << " ";
    os << "' fill='#b5e0b5' stroke='none'/>\n";
  }
  // Grid of the complex.
  for (const Rat& b : f.curve().breakpoints().points()) {
    double t = b.to_double();
    line(os, t, 0, t, 1, "#ccc", 0.7);
    line(os, 0, t, 1, t, "#ccc", 0.7);
  }
  for (const Rat& b : f.curve().breakpoints().points()) {
    for (int shift = 0; shift <= 1; ++shift) {
      double c = b.to_double() + shift;
      double x1 = std::max(0.0, c - 1.0), x2 = std::min(1.0, c);
      if (x1 <= x2) line(os, x1, c - x1, x2, c - x2, "#ccc", 0.7);
    }
  }
  for (size_t ei : cx.faces_of_dim(1)) {
    if (!add.face_additive[ei]) continue;
    const auto& vs = cx.faces()[ei].verts;
    line(os, vs[0].first.to_double(), vs[0].second.to_double(), vs[1].first.to_double(),
         vs[1].second.to_double(), "#2e8b2e", 2.5);
  }
  for (size_t vi : add.additive_vertices) {
    const Pt& v = cx.faces()[vi].verts[0];
    dot(os, v.first.to_double(), v.second.to_double(), false, "#2e8b2e");
  }
  frame(os);
  os << "</svg>\n";
  return os.str();
}

std::string svg_closure(const FinitePresentation& p) {
  std::ostringstream os;
  os << header();
  int ci = 0;
  for (const auto& comp : p.components()) {
    const char* color = kPalette[ci++ % 6];
    for (const auto& a : comp.parts())
      for (const auto& b : comp.parts()) {
        os << "<rect x='" << num(sx(a.lo().to_double())) << "' y='"
           << num(sy(b.hi().to_double())) << "' width='"
           << num((a.hi() - a.lo()).to_double() * (kSize - 2 * kMargin)) << "' height='"
           << num((b.hi() - b.lo()).to_double() * (kSize - 2 * kMargin)) << "' fill='" << color
           << "' fill-opacity='0.55' stroke='none'/>\n";
      }
  }
  for (const Move& m : p.moves()) {
    auto [a, b] = graph_segment(m);
    const char* color = m.is_translation() ? "#2040c0" : "#c03030";
    line(os, a.first.to_double(), a.second.to_double(), b.first.to_double(),
         b.second.to_double(), color, 2.0);
    dot(os, a.first.to_double(), a.second.to_double(), true, color);
    dot(os, b.first.to_double(), b.second.to_double(), true, color);
  }
  frame(os);
  os << "</svg>\n";
  return os.str();
}

}  // namespace groupcut
