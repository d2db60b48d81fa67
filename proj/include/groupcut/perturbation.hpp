#ifndef GROUPCUT_PERTURBATION_HPP
#define GROUPCUT_PERTURBATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "groupcut/closure.hpp"
#include "groupcut/complex2d.hpp"
#include "groupcut/linalg.hpp"
#include "groupcut/presentation.hpp"
#include "groupcut/pwl.hpp"

namespace groupcut {

/// Raised when the analyzed function falls outside the supported class
/// (most notably: discontinuous from both sides of the origin).
class UnsupportedFunction : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The point sets feeding the refined complex T = P_{B'}:
///   X: endpoints of covered/uncovered intervals plus {0, 1};
///   V: projections of the additive vertices of Delta P_B (mod 1);
///   Y: V cap U together with one move application of it;
///   Z: uncovered reflection fixed points r/2;
///   B' = X cup Y cup Z; U' = U minus B'.
struct RefinementData {
  IntervalUnion C, U;
  std::vector<Rat> X, V, Y, Z;
  BreakpointSet Bprime;
  IntervalUnion Uprime;
};

/// Computes the refinement and verifies the breakpoint stabilization
/// theorem and move-invariance of X, Y, Z; a violation signals a closure
/// bug and throws std::logic_error.
RefinementData refine(const PwlFunction& fn, const FinitePresentation& closure);

/// Cells of T inside U' connected by the restricted maximal moves, with a
/// designated fundamental domain and one connecting move per cell.
struct UncoveredComponent {
  std::vector<OpenInterval> intervals;
  OpenInterval fundamental_domain;
  std::vector<Move> connecting_moves;  // j-th maps the fundamental domain onto intervals[j]
};

std::vector<UncoveredComponent> uncovered_components(const PwlFunction& fn,
                                                     const FinitePresentation& closure,
                                                     const RefinementData& ref);

/// Basis of the space of perturbations piecewise linear over T, together
/// with the uncovered components and the raw null-space solution in
/// (covered slopes, uncovered slopes, jumps) coordinates.
struct PerturbationSpace {
  std::vector<PerturbationFn> finite_basis;
  std::vector<UncoveredComponent> components;
  RatMat slope_jump_solution;
  std::vector<std::string> variable_names;
};

/// Solves the homogeneous system of Lemma-style conditions: value 0 at 0,
/// f and 1, and every tight additivity limit of Delta T preserved.  Throws
/// UnsupportedFunction for two-sided discontinuous input.
PerturbationSpace finite_dim_space(const PwlFunction& fn, const RefinementData& ref,
                                   const FinitePresentation& closure);

/// Triangle bump of the given height on the fundamental domain, propagated
/// to every interval of the component through its connecting moves with
/// the character sign; zero elsewhere.
PerturbationFn equivariant_sample(const UncoveredComponent& comp, const Rat& height);

struct EpsilonResult {
  Rat eps;
  bool effective = false;
  std::string diagnostic;  // set when not effective
};

/// Largest eps with fn +- eps*pert both minimal: minimum of slack ratios
/// over the vertices of the common refinement plus the nonnegativity
/// bounds; 1 when unconstrained.  The result is re-verified through
/// check_minimality; an inconsistency throws std::logic_error.
EpsilonResult epsilon_for(const PwlFunction& fn, const PerturbationFn& pert);

/// Splits an effective perturbation into its interpolation over T and the
/// remainder vanishing (with one-sided limits) at every vertex of T.
std::pair<PerturbationFn, PerturbationFn> decompose(const PwlFunction& fn,
                                                    const RefinementData& ref,
                                                    const PerturbationFn& pert);

enum class Verdict { Extreme, NotExtreme, Unsupported };

std::string to_string(Verdict v);

struct ExtremalityReport {
  Verdict verdict = Verdict::Unsupported;
  std::string reason;  // for Unsupported
  MinimalityReport minimality;
  std::optional<ClosureResult> closure;
  std::optional<RefinementData> refinement;
  std::vector<UncoveredComponent> components;
  std::optional<PerturbationSpace> space;
  std::optional<PerturbationFn> witness;
  Rat epsilon;  // verified, when a witness is present
};

/// Full pipeline: minimality, moves closure, refinement, finite-dimensional
/// space, uncovered components.  Extreme iff the basis is empty and there
/// is no uncovered component; NotExtreme ships a witness with verified
/// eps > 0; anything outside the supported class yields Unsupported.
ExtremalityReport extremality_test(const PwlFunction& fn, const ClosureOptions& opts = {});

}  // namespace groupcut

#endif
