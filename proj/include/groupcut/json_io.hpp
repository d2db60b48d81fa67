#ifndef GROUPCUT_JSON_IO_HPP
#define GROUPCUT_JSON_IO_HPP

#include <json.hpp>

#include "groupcut/perturbation.hpp"

namespace groupcut {

// Insertion-ordered JSON keeps emitted documents byte-stable.
using Json = nlohmann::ordered_json;

Json function_to_json(const PwlFunction& fn);
PwlFunction function_from_json(const Json& j);

Json curve_to_json(const PiecewiseCurve& c);
PiecewiseCurve curve_from_json(const Json& j);

Json move_to_json(const Move& m);
Move move_from_json(const Json& j);

Json interval_union_to_json(const IntervalUnion& u);
IntervalUnion interval_union_from_json(const Json& j);

Json presentation_to_json(const FinitePresentation& p);
FinitePresentation presentation_from_json(const Json& j);

Json minimality_to_json(const MinimalityReport& rep);
Json refinement_to_json(const RefinementData& ref);
Json report_to_json(const ExtremalityReport& rep);

}  // namespace groupcut

#endif
