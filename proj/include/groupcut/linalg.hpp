#ifndef GROUPCUT_LINALG_HPP
#define GROUPCUT_LINALG_HPP

#include <vector>

#include "groupcut/rational.hpp"

namespace groupcut {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

/// Reduced row echelon form in place; returns the pivot columns.
/// Deterministic: the pivot is the first row with a nonzero entry.
std::vector<size_t> rref(RatMat& m);

/// Basis of the null space of the homogeneous system m * x = 0 with ncols
/// unknowns (rows are equations).  Exact; deterministic ordering by free
/// column index, each vector normalized to 1 in its free coordinate.
RatMat nullspace_basis(RatMat m, size_t ncols);

}  // namespace groupcut

#endif
