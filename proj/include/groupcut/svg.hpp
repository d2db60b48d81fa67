#ifndef GROUPCUT_SVG_HPP
#define GROUPCUT_SVG_HPP

#include <optional>
#include <string>

#include "groupcut/complex2d.hpp"
#include "groupcut/presentation.hpp"
#include "groupcut/pwl.hpp"

namespace groupcut {

/// Graph of the function over [0,1] with one-sided limit markers: filled
/// dots for values, hollow circles for limits that differ.
std::string svg_function(const PwlFunction& fn,
                         const PerturbationFn* witness = nullptr);

/// The complex Delta P with additive faces shaded green and additive edges
/// drawn on top.
std::string svg_complex(const PwlFunction& fn);

/// Moves diagram: translation graphs blue, reflection graphs red, hollow
/// segment ends, component rectangles from a fixed palette.
std::string svg_closure(const FinitePresentation& p);

}  // namespace groupcut

#endif
