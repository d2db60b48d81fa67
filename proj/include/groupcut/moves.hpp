#ifndef GROUPCUT_MOVES_HPP
#define GROUPCUT_MOVES_HPP

#include <optional>
#include <string>
#include <vector>

#include "groupcut/interval.hpp"

namespace groupcut {

/// Restricted translation or reflection: the partial bijection x -> x + t
/// (character +1) or x -> r - x (character -1) with an open interval
/// domain, possibly empty.  All empty translations are one object and all
/// empty reflections another; the two are distinct.  Moves are kept on the
/// fundamental domain: domains inside (0,1), t in (-1,1), r in (0,2); the
/// parameter of an empty move is canonicalized to 0 resp. 1.
class Move {
public:
  static Move translation(const Rat& t, const OpenInterval& dom);
  static Move reflection(const Rat& r, const OpenInterval& dom);
  static Move empty_translation() { return translation(Rat(0), OpenInterval::empty()); }
  static Move empty_reflection() { return reflection(Rat(1), OpenInterval::empty()); }

  int chi() const { return chi_; }
  bool is_translation() const { return chi_ == 1; }
  bool is_reflection() const { return chi_ == -1; }
  const Rat& param() const { return param_; }
  const OpenInterval& domain() const { return dom_; }
  bool is_empty() const { return dom_.is_empty(); }

  /// Image gamma(D) of the domain.
  OpenInterval image() const;

  /// Unrestricted map applied to a point, ignoring the domain.
  Rat map(const Rat& x) const { return chi_ == 1 ? x + param_ : param_ - x; }
  Rat map_inv(const Rat& x) const { return chi_ == 1 ? x - param_ : param_ - x; }

  /// Image of x, or nullopt when x is outside the domain.
  std::optional<Rat> apply(const Rat& x) const;

  /// Preimage of an open interval under the unrestricted map.
  OpenInterval preimage(const OpenInterval& i) const;

  std::string str() const;

  friend bool operator==(const Move& a, const Move& b) {
    return a.chi_ == b.chi_ && a.param_ == b.param_ && a.dom_ == b.dom_;
  }
  friend bool operator!=(const Move& a, const Move& b) { return !(a == b); }
  friend bool operator<(const Move& a, const Move& b);

private:
  Move(int chi, Rat param, OpenInterval dom);
  int chi_;
  Rat param_;
  OpenInterval dom_;
};

/// Composition outer o inner: the unrestricted parts compose in the group,
/// characters multiply, and the domain is inner.domain intersected with the
/// preimage of outer.domain.  An empty result carries the product character.
Move compose(const Move& outer, const Move& inner);

/// (gamma|_D)^{-1} = gamma^{-1}|_{gamma(D)}; empty moves map to themselves.
Move inverse(const Move& m);

/// Restriction to d, which must be contained in the domain.
Move restrict(const Move& m, const OpenInterval& d);

/// Corestriction to i, which must be contained in the image.
Move corestrict(const Move& m, const OpenInterval& i);

/// Restriction partial order: same character, same parameter (for nonempty
/// a) and domain containment.  Translations and reflections are always
/// incomparable; an empty move precedes every move of its character.
bool is_restriction_of(const Move& a, const Move& b);

/// Endpoints of the graph segment in the (x, gamma(x)) plane; slope is the
/// character.  Ends are hollow (domain open).  Requires a nonempty move.
std::pair<std::pair<Rat, Rat>, std::pair<Rat, Rat>> graph_segment(const Move& m);

/// Splits a translation whose image leaves (0,1) into fundamental-domain
/// moves by taking the image modulo 1; reflections with r in (0,2) already
/// map (0,1) into itself wherever the image is admissible.
std::vector<Move> wrap_translation(const Rat& t, const OpenInterval& dom);

}  // namespace groupcut

#endif
