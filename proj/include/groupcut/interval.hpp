#ifndef GROUPCUT_INTERVAL_HPP
#define GROUPCUT_INTERVAL_HPP

#include <string>
#include <vector>

#include "groupcut/rational.hpp"

namespace groupcut {

/// Open interval (lo, hi) with rational endpoints, or the distinguished
/// empty set.  Endpoints are never members.  Non-empty requires lo < hi
/// strictly; singletons do not exist.
class OpenInterval {
public:
  OpenInterval() : lo_(0), hi_(0), empty_(true) {}
  OpenInterval(Rat lo, Rat hi);

  static OpenInterval empty() { return OpenInterval(); }

  bool is_empty() const { return empty_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  Rat length() const { return empty_ ? Rat(0) : hi_ - lo_; }
  Rat midpoint() const;

  bool contains(const Rat& x) const { return !empty_ && lo_ < x && x < hi_; }
  bool contains(const OpenInterval& o) const;

  friend bool operator==(const OpenInterval& a, const OpenInterval& b) {
    if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }
  friend bool operator!=(const OpenInterval& a, const OpenInterval& b) { return !(a == b); }

  /// Order by lo, then hi; empty sorts first.
  friend bool operator<(const OpenInterval& a, const OpenInterval& b);

  std::string str() const;

private:
  Rat lo_, hi_;
  bool empty_;
};

/// Open intersection; Empty when disjoint or merely touching.
OpenInterval interval_intersect(const OpenInterval& a, const OpenInterval& b);

/// x + t and t - x images of an open interval.
OpenInterval translate(const OpenInterval& d, const Rat& t);
OpenInterval reflect(const OpenInterval& d, const Rat& r);

/// Finite union of disjoint open intervals in canonical form: parts sorted
/// by lo, pairwise disjoint; touching parts (hi_i == lo_{i+1}) are kept
/// separate because the shared endpoint is not a member of either.
class IntervalUnion {
public:
  IntervalUnion() = default;
  IntervalUnion(std::initializer_list<OpenInterval> parts);
  explicit IntervalUnion(const OpenInterval& iv);
  explicit IntervalUnion(std::vector<OpenInterval> parts);

  const std::vector<OpenInterval>& parts() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }
  Rat total_length() const;

  bool contains(const Rat& x) const;
  bool contains(const OpenInterval& iv) const;
  bool contains(const IntervalUnion& other) const;

  friend bool operator==(const IntervalUnion& a, const IntervalUnion& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const IntervalUnion& a, const IntervalUnion& b) { return !(a == b); }

  std::string str() const;
  static IntervalUnion parse(const std::string& s);

private:
  std::vector<OpenInterval> parts_;  // canonical
};

IntervalUnion union_of(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b);

/// a minus the closure of b.  Removing a closed set from an open set keeps
/// the result open, so this stays within the type.
IntervalUnion difference(const IntervalUnion& a, const IntervalUnion& b);

/// The finite boundary set of the closure: all part endpoints.
std::vector<Rat> boundary(const IntervalUnion& u);

IntervalUnion translate(const IntervalUnion& u, const Rat& t);
IntervalUnion reflect(const IntervalUnion& u, const Rat& r);

}  // namespace groupcut

#endif
