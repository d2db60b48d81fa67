#ifndef GROUPCUT_PRESENTATION_HPP
#define GROUPCUT_PRESENTATION_HPP

#include <vector>

#include "groupcut/interval.hpp"
#include "groupcut/moves.hpp"

namespace groupcut {

/// Finite presentation (moves, components) of a kaleidoscopic joined
/// ensemble: the presented ensemble consists of all restrictions of the
/// listed moves, all moves whose graph lies inside some C_i x C_i, and
/// their joins.  The continuity set A bounds all domains and images.
class FinitePresentation {
public:
  FinitePresentation(std::vector<Move> moves, std::vector<IntervalUnion> components,
                     IntervalUnion continuity);

  const std::vector<Move>& moves() const { return moves_; }
  const std::vector<IntervalUnion>& components() const { return components_; }
  const IntervalUnion& continuity() const { return continuity_; }

  /// Union of all components: the set of covered points.
  IntervalUnion covered_set() const;

  std::string str() const;

private:
  std::vector<Move> moves_;                 // nonempty domains, sorted
  std::vector<IntervalUnion> components_;   // sorted by first part
  IntervalUnion continuity_;
};

/// Admissible domain of the map with the given character and parameter in
/// the presented joined ensemble: union of the domains of same-map listed
/// moves and of the component-induced segments {x in C_i : gamma(x) in C_i}.
IntervalUnion admissible_domain(const FinitePresentation& p, int chi, const Rat& param);

/// Whether the move (all restrictions of it) belongs to the presented
/// joined ensemble.
bool joined_membership(const FinitePresentation& p, const Move& m);

/// Reduced form: per (character, parameter), the maximal moves of the
/// presented ensemble that are not covered by a component rectangle.
/// Unique for a fixed presented ensemble; does not join across continuity
/// points (that is extend_moves_by_continuity).
FinitePresentation reduce(const FinitePresentation& p);

/// Grows component `comp_index` by the image of move `move_index`, whose
/// domain must lie inside that component.  The move becomes redundant and
/// is dropped by a subsequent reduce.
FinitePresentation extend_component_by_move(const FinitePresentation& p, size_t move_index,
                                            size_t comp_index);

/// Components with overlapping interiors are unioned until pairwise
/// disjoint; a move carrying part of one component into another also
/// triggers their union.
FinitePresentation merge_components(const FinitePresentation& p);

/// For each (character, parameter): same-map moves gamma|(l,m), gamma|(m,u)
/// join into gamma|(l,u) whenever m and gamma(m) lie in the continuity set;
/// iterated to fixpoint.  Component-induced segments take part in the
/// bridging.
FinitePresentation extend_moves_by_continuity(const FinitePresentation& p);

/// Touching parts of one component merge across continuity points: the
/// rectangle over the joined interval lies in the extension-closed hull of
/// moves(C_i x C_i), because every spanning move crosses only points of
/// C_i or the touching point, all inside the continuity set.
FinitePresentation merge_component_parts_by_continuity(const FinitePresentation& p);

/// Double restriction to R: maximal moves with domain and image inside
/// parts of R, plus the restricted components (their internal moves) and
/// restricted continuity set.
FinitePresentation restrict_to(const FinitePresentation& p, const IntervalUnion& r);

/// Set equality of moves and of normalized component lists; both inputs
/// are expected in reduced form.
bool canonical_eq(const FinitePresentation& a, const FinitePresentation& b);

}  // namespace groupcut

#endif
