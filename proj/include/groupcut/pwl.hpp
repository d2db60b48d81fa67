#ifndef GROUPCUT_PWL_HPP
#define GROUPCUT_PWL_HPP

#include <map>
#include <string>
#include <vector>

#include "groupcut/interval.hpp"
#include "groupcut/rational.hpp"

namespace groupcut {

/// One-sided limits and value at a breakpoint.
struct LimitTriple {
  Rat left, value, right;
  friend bool operator==(const LimitTriple& a, const LimitTriple& b) {
    return a.left == b.left && a.value == b.value && a.right == b.right;
  }
  bool is_continuous() const { return left == value && value == right; }
};

/// Strictly increasing breakpoints with first = 0 and last = 1.
class BreakpointSet {
public:
  BreakpointSet() : points_{Rat(0), Rat(1)} {}
  explicit BreakpointSet(std::vector<Rat> points);
  const std::vector<Rat>& points() const { return points_; }
  size_t size() const { return points_.size(); }
  const Rat& operator[](size_t i) const { return points_[i]; }
  friend bool operator==(const BreakpointSet& a, const BreakpointSet& b) {
    return a.points_ == b.points_;
  }

private:
  std::vector<Rat> points_;
};

/// Z-periodic piecewise linear curve over a breakpoint set, allowed to be
/// discontinuous.  On each open cell (x_i, x_{i+1}) the function is the
/// affine interpolant of right limit at x_i and left limit at x_{i+1}.
/// All three of (left limit, value, right limit) are stored at every
/// breakpoint; continuity is a derived predicate, not a type split.
class PiecewiseCurve {
public:
  /// Requires one triple per breakpoint, with the triples at 0 and 1 equal
  /// (they describe the same point of the circle).
  PiecewiseCurve(BreakpointSet breakpoints, std::vector<LimitTriple> triples);

  const BreakpointSet& breakpoints() const { return bkpts_; }
  const std::vector<LimitTriple>& triples() const { return triples_; }

  Rat eval(const Rat& x) const;
  LimitTriple limits(const Rat& x) const;
  /// dir < 0: left limit, dir == 0: value, dir > 0: right limit.
  Rat limit_at(const Rat& x, int dir) const;

  bool is_continuous() const;
  /// Discontinuity points within (0, 1).
  std::vector<Rat> interior_discontinuities() const;
  /// True when the periodic function is continuous at the integers.
  bool continuous_at_origin_left() const { return triples_.front().left == triples_.front().value; }
  bool continuous_at_origin_right() const { return triples_.front().right == triples_.front().value; }

  /// Drops interior breakpoints where the curve is continuous and affine
  /// across, yielding the coarsest complex representing the same function.
  PiecewiseCurve canonicalized() const;

  friend bool operator==(const PiecewiseCurve& a, const PiecewiseCurve& b) {
    return a.bkpts_ == b.bkpts_ && a.triples_ == b.triples_;
  }

  /// Exact pointwise linear combination over the common refinement.
  static PiecewiseCurve combine(const std::vector<std::pair<Rat, const PiecewiseCurve*>>& terms);

  /// Continuous interpolant through (x_i, v_i); pairs over [0,1] with 0 and
  /// 1 both present.
  static PiecewiseCurve interpolate(std::vector<Rat> xs, std::vector<Rat> values);

private:
  BreakpointSet bkpts_;
  std::vector<LimitTriple> triples_;
  size_t cell_index(const Rat& y) const;  // y in [0,1)
};

/// Z-periodic piecewise linear function with marked f, 0 < f < 1; the shape
/// analyzed for minimality and extremality.
class PwlFunction {
public:
  PwlFunction(PiecewiseCurve curve, Rat f);

  const PiecewiseCurve& curve() const { return curve_; }
  const Rat& f() const { return f_; }

  Rat eval(const Rat& x) const { return curve_.eval(x); }
  LimitTriple limits(const Rat& x) const { return curve_.limits(x); }
  Rat limit_at(const Rat& x, int dir) const { return curve_.limit_at(x, dir); }

  /// Maximal open subset of (0,1) on which the function is continuous.
  IntervalUnion continuity_set() const;

  PwlFunction canonicalized() const { return PwlFunction(curve_.canonicalized(), f_); }

  friend bool operator==(const PwlFunction& a, const PwlFunction& b) {
    return a.f_ == b.f_ && a.curve_ == b.curve_;
  }

private:
  PiecewiseCurve curve_;
  Rat f_;
};

/// A perturbation shape: same representation as PwlFunction but without the
/// f-normalization; values unconstrained in sign.
class PerturbationFn {
public:
  explicit PerturbationFn(PiecewiseCurve curve) : curve_(std::move(curve)) {}

  const PiecewiseCurve& curve() const { return curve_; }
  Rat eval(const Rat& x) const { return curve_.eval(x); }
  LimitTriple limits(const Rat& x) const { return curve_.limits(x); }
  Rat limit_at(const Rat& x, int dir) const { return curve_.limit_at(x, dir); }
  bool is_zero() const;

  friend bool operator==(const PerturbationFn& a, const PerturbationFn& b);

private:
  PiecewiseCurve curve_;
};

PerturbationFn zero_perturbation();

// ---- catalog ----------------------------------------------------------

/// Gomory mixed-integer cut: x/f on [0,f], (1-x)/(1-f) on [f,1].
PwlFunction gmic(const Rat& f);

/// One-sided discontinuous minimal function, f = 1/2: 0 at 0, 1/2 on
/// (0,1/2), 2(1-x) on [1/2,1).
PwlFunction equiv7_example_1();

/// Two-sided discontinuous minimal function, f = 1/2: 0 at 0, 1/2 on
/// (0,1/2) and (1/2,1), 1 at 1/2.
PwlFunction minimal_no_covered_interval();

/// Symmetric two-slope function: rises with one positive slope near 0 and f,
/// falls with slope -1/(1-f) in between and after f.  s in (0,1) controls
/// the height 1/2 + s/2 of the first peak.
PwlFunction two_slope(const Rat& f, const Rat& s);

/// Catalog dispatcher for the CLI; throws std::invalid_argument on unknown
/// name or parameter out of range.
PwlFunction make_builtin(const std::string& name, const std::vector<Rat>& params);

/// Continuous function with breakpoints in (1/q)Z through the given grid
/// values; keys must be exactly {0, 1/q, ..., (q-1)/q} and f must be a key.
PwlFunction interpolate_from_grid(const std::map<Rat, Rat>& values, const Rat& f);

PerturbationFn linear_combine(const std::vector<std::pair<Rat, const PerturbationFn*>>& terms);
PwlFunction perturbed(const PwlFunction& fn, const Rat& eps, const PerturbationFn& pert);

}  // namespace groupcut

#endif
