#ifndef GROUPCUT_GRIDORACLE_HPP
#define GROUPCUT_GRIDORACLE_HPP

#include <vector>

#include "groupcut/linalg.hpp"
#include "groupcut/pwl.hpp"

namespace groupcut {

/// Restriction of a function to the finite cyclic group (1/q)Z: the data of
/// the finite master problem.
struct GridFunction {
  long q = 0;
  std::vector<Rat> values;  // values[i] at i/q
  Rat f;
};

/// Pointwise restriction; refuses when f is off-grid or the function is
/// discontinuous at a grid point (the oracle serves the continuous corpus).
GridFunction restrict_to_grid(const PwlFunction& fn, long q);

/// Finite minimality system: nonnegativity, pi(0)=0, pi(f)=1, subadditivity
/// over all grid pairs, symmetry.
bool grid_minimality(const GridFunction& g);

/// Null space basis of the homogeneous tightness system: pert(0)=pert(f)=0
/// and additivity preserved on every tight pair.  Dimension 0 means the
/// restriction is extreme for the finite master problem.
RatMat grid_perturbation_basis(const GridFunction& g);
long grid_perturbation_dimension(const GridFunction& g);

/// Interpolate a grid perturbation vector to a continuous PerturbationFn.
PerturbationFn grid_perturbation_to_fn(const GridFunction& g, const RatVec& coords);

enum class GridVerdict { Extreme, NotExtreme };

/// Brute-force extremality check: restrict to the (1/(oversample*q))-grid
/// and test for a nontrivial grid perturbation.
GridVerdict grid_extremality_oracle(const PwlFunction& fn, long oversample = 4);

}  // namespace groupcut

#endif
