#include "groupcut/interval.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace groupcut {

OpenInterval::OpenInterval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)), empty_(false) {
  if (!(lo_ < hi_)) {
    lo_ = Rat(0);
    hi_ = Rat(0);
    empty_ = true;
  }
}

Rat OpenInterval::midpoint() const {
  if (empty_) throw std::logic_error("OpenInterval: midpoint of empty interval");
  return (lo_ + hi_) / Rat(2);
}

bool OpenInterval::contains(const OpenInterval& o) const {
  if (o.empty_) return true;
  if (empty_) return false;
  return lo_ <= o.lo_ && o.hi_ <= hi_;
}

bool operator<(const OpenInterval& a, const OpenInterval& b) {
  if (a.empty_ != b.empty_) return a.empty_;
  if (a.empty_) return false;
  if (a.lo_ != b.lo_) return a.lo_ < b.lo_;
  return a.hi_ < b.hi_;
}

std::string OpenInterval::str() const {
  if (empty_) return "()";
  return "(" + lo_.str() + "," + hi_.str() + ")";
}

OpenInterval interval_intersect(const OpenInterval& a, const OpenInterval& b) {
  if (a.is_empty() || b.is_empty()) return OpenInterval::empty();
  Rat lo = std::max(a.lo(), b.lo());
  Rat hi = std::min(a.hi(), b.hi());
  return OpenInterval(lo, hi);  // collapses to empty when lo >= hi
}

OpenInterval translate(const OpenInterval& d, const Rat& t) {
  if (d.is_empty()) return d;
  return OpenInterval(d.lo() + t, d.hi() + t);
}

OpenInterval reflect(const OpenInterval& d, const Rat& r) {
  if (d.is_empty()) return d;
  return OpenInterval(r - d.hi(), r - d.lo());
}

IntervalUnion::IntervalUnion(const OpenInterval& iv) {
  if (!iv.is_empty()) parts_.push_back(iv);
}

IntervalUnion::IntervalUnion(std::initializer_list<OpenInterval> parts)
    : IntervalUnion(std::vector<OpenInterval>(parts)) {}

IntervalUnion::IntervalUnion(std::vector<OpenInterval> parts) {
  std::erase_if(parts, [](const OpenInterval& p) { return p.is_empty(); });
  std::sort(parts.begin(), parts.end());
  // Merge strictly overlapping parts; touching parts stay separate.
  for (const OpenInterval& p : parts) {
    if (!parts_.empty() && p.lo() < parts_.back().hi()) {
      if (p.hi() > parts_.back().hi())
        parts_.back() = OpenInterval(parts_.back().lo(), p.hi());
    } else {
      parts_.push_back(p);
    }
  }
}

Rat IntervalUnion::total_length() const {
  Rat s(0);
  for (const auto& p : parts_) s += p.length();
  return s;
}

bool IntervalUnion::contains(const Rat& x) const {
  for (const auto& p : parts_) {
    if (p.contains(x)) return true;
    if (p.lo() >= x) break;
  }
  return false;
}

bool IntervalUnion::contains(const OpenInterval& iv) const {
  if (iv.is_empty()) return true;
  for (const auto& p : parts_)
    if (p.contains(iv)) return true;
  return false;
}

bool IntervalUnion::contains(const IntervalUnion& other) const {
  for (const auto& p : other.parts_)
    if (!contains(p)) return false;
  return true;
}

std::string IntervalUnion::str() const {
  if (parts_.empty()) return "{}";
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << " u ";
    os << parts_[i].str();
  }
  return os.str();
}

IntervalUnion IntervalUnion::parse(const std::string& s) {
  std::vector<OpenInterval> parts;
  if (s == "{}") return IntervalUnion();
  size_t pos = 0;
  while (pos < s.size()) {
    size_t open = s.find('(', pos);
    if (open == std::string::npos) break;
    size_t comma = s.find(',', open);
    size_t close = s.find(')', open);
    if (comma == std::string::npos || close == std::string::npos || comma > close)
      throw std::invalid_argument("IntervalUnion: cannot parse '" + s + "'");
    Rat lo = Rat::parse(s.substr(open + 1, comma - open - 1));
    Rat hi = Rat::parse(s.substr(comma + 1, close - comma - 1));
    parts.emplace_back(lo, hi);
    pos = close + 1;
  }
  return IntervalUnion(std::move(parts));
}

IntervalUnion union_of(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<OpenInterval> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return IntervalUnion(std::move(parts));
}

IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<OpenInterval> parts;
  for (const auto& p : a.parts())
    for (const auto& q : b.parts()) {
      OpenInterval r = interval_intersect(p, q);
      if (!r.is_empty()) parts.push_back(r);
    }
  return IntervalUnion(std::move(parts));
}

IntervalUnion difference(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<OpenInterval> parts;
  for (const auto& p : a.parts()) {
    // Subtract the closed parts [lo, hi] of b from the open part p.
    std::vector<OpenInterval> pieces{p};
    for (const auto& q : b.parts()) {
      std::vector<OpenInterval> next;
      for (const auto& piece : pieces) {
        if (q.hi() <= piece.lo() || q.lo() >= piece.hi()) {
          next.push_back(piece);
          continue;
        }
        OpenInterval left(piece.lo(), q.lo());
        OpenInterval right(q.hi(), piece.hi());
        if (!left.is_empty()) next.push_back(left);
        if (!right.is_empty()) next.push_back(right);
      }
      pieces = std::move(next);
    }
    parts.insert(parts.end(), pieces.begin(), pieces.end());
  }
  return IntervalUnion(std::move(parts));
}

std::vector<Rat> boundary(const IntervalUnion& u) {
  std::vector<Rat> pts;
  for (const auto& p : u.parts()) {
    pts.push_back(p.lo());
    pts.push_back(p.hi());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

IntervalUnion translate(const IntervalUnion& u, const Rat& t) {
  std::vector<OpenInterval> parts;
  parts.reserve(u.parts().size());
  for (const auto& p : u.parts()) parts.push_back(translate(p, t));
  return IntervalUnion(std::move(parts));
}

IntervalUnion reflect(const IntervalUnion& u, const Rat& r) {
  std::vector<OpenInterval> parts;
  parts.reserve(u.parts().size());
  for (const auto& p : u.parts()) parts.push_back(reflect(p, r));
  return IntervalUnion(std::move(parts));
}

}  // namespace groupcut
