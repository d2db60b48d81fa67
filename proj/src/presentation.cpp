#include "groupcut/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace groupcut {

namespace {

IntervalUnion map_image(int chi, const Rat& param, const IntervalUnion& u) {
  return chi == 1 ? translate(u, param) : reflect(u, param);
}

IntervalUnion map_preimage(int chi, const Rat& param, const IntervalUnion& u) {
  return chi == 1 ? translate(u, -param) : reflect(u, param);
}

Rat map_point(int chi, const Rat& param, const Rat& x) {
  return chi == 1 ? x + param : param - x;
}

// Segments of the map's graph lying inside some component rectangle
// C_i x C_i.
IntervalUnion component_bridges(const std::vector<IntervalUnion>& components, int chi,
                                const Rat& param) {
  IntervalUnion acc;
  for (const auto& c : components)
    acc = union_of(acc, intersect(c, map_preimage(chi, param, c)));
  return acc;
}

// Graph of gamma|_D inside the union of rectangles P x Q over parts of one
// component.  D connected, so it fits one rectangle pair.
bool covered_by_component(const std::vector<IntervalUnion>& components, int chi,
                          const Rat& param, const OpenInterval& d) {
  OpenInterval img = chi == 1 ? translate(d, param) : reflect(d, param);
  for (const auto& c : components)
    for (const auto& p : c.parts()) {
      if (!p.contains(d)) continue;
      for (const auto& q : c.parts())
        if (q.contains(img)) return true;
    }
  return false;
}

struct MapKey {
  int chi;
  Rat param;
  bool operator<(const MapKey& o) const {
    if (chi != o.chi) return chi > o.chi;
    return param < o.param;
  }
};

std::map<MapKey, IntervalUnion> group_domains(const std::vector<Move>& moves) {
  std::map<MapKey, IntervalUnion> slots;
  for (const Move& m : moves) {
    auto& u = slots[MapKey{m.chi(), m.param()}];
    u = union_of(u, IntervalUnion(m.domain()));
  }
  return slots;
}

std::vector<Move> slice_to_moves(const MapKey& key, const IntervalUnion& u,
                                 const std::vector<IntervalUnion>& components) {
  std::vector<Move> out;
  for (const OpenInterval& part : u.parts()) {
    if (covered_by_component(components, key.chi, key.param, part)) continue;
    out.push_back(key.chi == 1 ? Move::translation(key.param, part)
                               : Move::reflection(key.param, part));
  }
  return out;
}

// Join touching parts across continuity points of both x and gamma(x).
IntervalUnion extend_join(const IntervalUnion& u, const IntervalUnion& a, int chi,
                          const Rat& param) {
  std::vector<OpenInterval> out;
  for (const OpenInterval& part : u.parts()) {
    if (!out.empty() && out.back().hi() == part.lo() && a.contains(part.lo()) &&
        a.contains(map_point(chi, param, part.lo()))) {
      out.back() = OpenInterval(out.back().lo(), part.hi());
    } else {
      out.push_back(part);
    }
  }
  return IntervalUnion(std::move(out));
}

}  // namespace

FinitePresentation::FinitePresentation(std::vector<Move> moves,
                                       std::vector<IntervalUnion> components,
                                       IntervalUnion continuity)
    : continuity_(std::move(continuity)) {
  for (Move& m : moves) {
    if (m.is_empty()) continue;
    if (!continuity_.contains(m.domain()) || !continuity_.contains(m.image()))
      throw std::invalid_argument("FinitePresentation: move " + m.str() +
                                  " leaves the continuity set " + continuity_.str());
    moves_.push_back(std::move(m));
  }
  std::sort(moves_.begin(), moves_.end());
  moves_.erase(std::unique(moves_.begin(), moves_.end()), moves_.end());
  for (IntervalUnion& c : components) {
    if (c.is_empty()) continue;
    if (!continuity_.contains(c))
      throw std::invalid_argument("FinitePresentation: component " + c.str() +
                                  " leaves the continuity set");
    components_.push_back(std::move(c));
  }
  std::sort(components_.begin(), components_.end(),
            [](const IntervalUnion& a, const IntervalUnion& b) { return a.parts() < b.parts(); });
}

IntervalUnion FinitePresentation::covered_set() const {
  IntervalUnion acc;
  for (const auto& c : components_) acc = union_of(acc, c);
  return acc;
}

std::string FinitePresentation::str() const {
  std::ostringstream os;
  os << "moves:";
  for (const auto& m : moves_) os << " " << m.str();
  os << " components:";
  for (const auto& c : components_) os << " " << c.str();
  return os.str();
}

IntervalUnion admissible_domain(const FinitePresentation& p, int chi, const Rat& param) {
  IntervalUnion u = component_bridges(p.components(), chi, param);
  for (const Move& m : p.moves())
    if (m.chi() == chi && m.param() == param) u = union_of(u, IntervalUnion(m.domain()));
  return u;
}

bool joined_membership(const FinitePresentation& p, const Move& m) {
  if (m.is_empty()) return true;
  return admissible_domain(p, m.chi(), m.param()).contains(IntervalUnion(m.domain()));
}

FinitePresentation reduce(const FinitePresentation& p) {
  std::vector<Move> out;
  for (auto& [key, dom] : group_domains(p.moves())) {
    IntervalUnion u = union_of(dom, component_bridges(p.components(), key.chi, key.param));
    auto moves = slice_to_moves(key, u, p.components());
    out.insert(out.end(), moves.begin(), moves.end());
  }
  return FinitePresentation(std::move(out), p.components(), p.continuity());
}

FinitePresentation extend_component_by_move(const FinitePresentation& p, size_t move_index,
                                            size_t comp_index) {
  const Move& m = p.moves().at(move_index);
  std::vector<IntervalUnion> comps = p.components();
  IntervalUnion& c = comps.at(comp_index);
  if (!c.contains(m.domain()))
    throw std::invalid_argument("extend_component_by_move: domain of " + m.str() +
                                " not inside component " + c.str());
  c = union_of(c, IntervalUnion(m.image()));
  return FinitePresentation(p.moves(), std::move(comps), p.continuity());
}

FinitePresentation merge_components(const FinitePresentation& p) {
  std::vector<IntervalUnion> comps = p.components();
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < comps.size() && !changed; ++i)
      for (size_t j = i + 1; j < comps.size() && !changed; ++j) {
        bool linked = !intersect(comps[i], comps[j]).is_empty();
        if (!linked) {
          for (const Move& m : p.moves()) {
            IntervalUnion g =
                intersect(intersect(IntervalUnion(m.domain()), comps[i]),
                          map_preimage(m.chi(), m.param(), comps[j]));
            IntervalUnion h =
                intersect(intersect(IntervalUnion(m.domain()), comps[j]),
                          map_preimage(m.chi(), m.param(), comps[i]));
            if (!g.is_empty() || !h.is_empty()) {
              linked = true;
              break;
            }
          }
        }
        if (linked) {
          comps[i] = union_of(comps[i], comps[j]);
          comps.erase(comps.begin() + j);
          changed = true;
        }
      }
  }
  return FinitePresentation(p.moves(), std::move(comps), p.continuity());
}

FinitePresentation extend_moves_by_continuity(const FinitePresentation& p) {
  std::vector<Move> out;
  auto groups = group_domains(p.moves());
  // The identity slice can extend across a touching point of two covered
  // components with no explicit move present, so it is always enumerated.
  groups.emplace(MapKey{1, Rat(0)}, IntervalUnion());
  for (auto& [key, dom] : groups) {
    IntervalUnion u = union_of(dom, component_bridges(p.components(), key.chi, key.param));
    u = extend_join(u, p.continuity(), key.chi, key.param);
    auto moves = slice_to_moves(key, u, p.components());
    out.insert(out.end(), moves.begin(), moves.end());
  }
  return FinitePresentation(std::move(out), p.components(), p.continuity());
}

FinitePresentation merge_component_parts_by_continuity(const FinitePresentation& p) {
  std::vector<IntervalUnion> comps;
  comps.reserve(p.components().size());
  for (const IntervalUnion& c : p.components()) {
    std::vector<OpenInterval> parts;
    for (const OpenInterval& part : c.parts()) {
      if (!parts.empty() && parts.back().hi() == part.lo() &&
          p.continuity().contains(part.lo())) {
        parts.back() = OpenInterval(parts.back().lo(), part.hi());
      } else {
        parts.push_back(part);
      }
    }
    comps.push_back(IntervalUnion(std::move(parts)));
  }
  return FinitePresentation(p.moves(), std::move(comps), p.continuity());
}

FinitePresentation restrict_to(const FinitePresentation& p, const IntervalUnion& r) {
  std::vector<IntervalUnion> comps;
  for (const auto& c : p.components()) {
    IntervalUnion rc = intersect(c, r);
    if (!rc.is_empty()) comps.push_back(rc);
  }
  std::vector<Move> out;
  for (auto& [key, dom] : group_domains(p.moves())) {
    IntervalUnion u = union_of(dom, component_bridges(p.components(), key.chi, key.param));
    u = intersect(intersect(u, r), map_preimage(key.chi, key.param, r));
    auto moves = slice_to_moves(key, u, comps);
    out.insert(out.end(), moves.begin(), moves.end());
  }
  return FinitePresentation(std::move(out), std::move(comps), intersect(p.continuity(), r));
}

bool canonical_eq(const FinitePresentation& a, const FinitePresentation& b) {
  if (a.moves() != b.moves()) return false;
  if (a.components().size() != b.components().size()) return false;
  for (size_t i = 0; i < a.components().size(); ++i)
    if (a.components()[i] != b.components()[i]) return false;
  return true;
}

}  // namespace groupcut
