#ifndef GROUPCUT_CLOSURE_HPP
#define GROUPCUT_CLOSURE_HPP

#include <string>
#include <vector>

#include "groupcut/complex2d.hpp"
#include "groupcut/presentation.hpp"
#include "groupcut/pwl.hpp"

namespace groupcut {

struct ClosureOptions {
  /// Completion round limit; 0 selects 10*q^2 from the input grid.
  long budget = 0;
  /// Process composition candidates in reverse order; the fixpoint must
  /// not depend on it.
  bool reverse_worklist = false;
};

struct ClosureResult {
  FinitePresentation presentation;
  std::vector<std::string> steps;  // audit log of applied rules
  bool budget_exhausted = false;
  /// Dense-parameter promotions taken (limit axiom).  A parameter or
  /// endpoint leaving the input grid would be counted here; on exact
  /// rational input this stays zero.
  long promotion_count = 0;
};

/// The initial additive move ensemble of a minimal function, as a reduced
/// finite presentation: moves from the additive and limit-additive edges
/// of Delta P, components from the projections of the two-dimensional
/// additive faces, inverses added.  Throws std::domain_error when the
/// function is not minimal.
FinitePresentation initial_ensemble(const PwlFunction& fn);

/// Completion to the smallest reduced finite presentation closed under
/// composition, inverses, component extension and merging, and continuity
/// extension.  Deterministic; fixpoint detected by canonical equality.
ClosureResult moves_closure(const FinitePresentation& p, const ClosureOptions& opts = {});

/// Whether theta satisfies theta(gamma(x)) = chi * theta(x) + c on every
/// presentation move (checked at `samples` interior points and both
/// one-sided endpoint limits) and is affine with a common slope on every
/// component.
bool respects_check(const PiecewiseCurve& theta, const FinitePresentation& p, int samples = 32);

}  // namespace groupcut

#endif
