#ifndef GROUPCUT_COMPLEX2D_HPP
#define GROUPCUT_COMPLEX2D_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groupcut/pwl.hpp"

namespace groupcut {

using Pt = std::pair<Rat, Rat>;

/// Closed face of the 1-D complex: a breakpoint singleton (lo == hi) or a
/// cell [lo, hi] between consecutive breakpoints.  For the third projection
/// these live in [0, 2].
struct Cell1 {
  Rat lo, hi;
  bool is_vertex() const { return lo == hi; }
};

/// Face F(I,J,K) = {(x,y) : x in I, y in J, x+y in K} of the complex
/// Delta P.  Faces are deduplicated by geometry; (I,J,K) is the first
/// triple that produced the polytope.
struct Face2D {
  Cell1 I, J, K;
  std::vector<Pt> verts;  // corner points, CCW, lexicographically smallest first
  int dim = -1;

  Pt centroid() const;
  bool contains(const Pt& p) const;
  friend bool operator==(const Face2D& a, const Face2D& b) { return a.verts == b.verts; }
};

/// The two-dimensional polyhedral complex Delta P of a breakpoint set,
/// restricted to the fundamental square [0,1] x [0,1] with the third
/// coordinate in [0,2].
class Complex2D {
public:
  explicit Complex2D(const BreakpointSet& b);

  const std::vector<Face2D>& faces() const { return faces_; }
  const std::vector<size_t>& faces_of_dim(int d) const { return by_dim_[d]; }
  const BreakpointSet& breakpoints() const { return bkpts_; }

  /// Indices of faces containing the given point.
  std::vector<size_t> faces_containing(const Pt& p) const;

private:
  BreakpointSet bkpts_;
  std::vector<Face2D> faces_;
  std::array<std::vector<size_t>, 3> by_dim_;
};

/// Subadditivity slack pi(x) + pi(y) - pi(x+y), exact.
Rat delta_pi(const PwlFunction& fn, const Rat& x, const Rat& y);

/// Approach directions toward `vertex` from the relative interior of
/// `face`, as sign of the three projections of (centroid - vertex).
std::array<int, 3> approach_signs(const Face2D& face, const Pt& vertex);

/// Limit of the slack approaching `vertex` from relint(face); equals the
/// exact slack when the face is zero-dimensional.  Throws when the vertex
/// does not lie on the face.
Rat delta_pi_limit(const PwlFunction& fn, const Face2D& face, const Pt& vertex);

/// Same limit for a bare curve (perturbations).
Rat delta_limit(const PiecewiseCurve& curve, const Face2D& face, const Pt& vertex);

struct SubadditivityViolation {
  size_t face_index;
  Pt vertex;
  Rat value;
};

/// Additivity structure of a subadditive function over a complex.
struct AdditivityData {
  bool subadditive = true;
  std::optional<SubadditivityViolation> violation;

  /// Per face: slack limit vanishes at every vertex of the face, i.e. the
  /// face lies in its own E_F.
  std::vector<char> face_additive;

  /// Pairs (edge, parent): 1-D face contained in E_parent of an incident
  /// 2-D face; captures the limit-additivities of discontinuous functions.
  std::vector<std::pair<size_t, size_t>> limit_additive_edges;

  /// 0-dim face indices that are additive: the vertex lies in E_F for some
  /// incident face F (possibly the vertex itself).
  std::vector<size_t> additive_vertices;
};

AdditivityData analyze_additivity(const PwlFunction& fn, const Complex2D& cx);

/// Additive faces of the complex (faces in their own E_F).  Throws
/// std::domain_error with a certificate when fn is not subadditive.
std::vector<Face2D> additive_faces(const PwlFunction& fn, const Complex2D& cx);

struct MinimalityReport {
  bool minimal = false;
  std::string reason;              // violated condition, empty when minimal
  std::optional<Pt> witness;       // violating point, when applicable
  explicit operator bool() const { return minimal; }
};

/// Gomory's characterization for Z-periodic piecewise linear functions:
/// pi(0) = 0, pi(f) = 1, 0 <= pi <= 1, subadditivity at every vertex of
/// Delta P (limits included), and the symmetry condition along
/// x + y in {f, 1+f}.
MinimalityReport check_minimality(const PwlFunction& fn);

}  // namespace groupcut

#endif
