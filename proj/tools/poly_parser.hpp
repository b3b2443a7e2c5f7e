#pragma once

#include <string_view>

#include "crfe/polynomial.hpp"

namespace crfe {

// Polynomial literal in Cartesian coordinates, e.g. "3/2*x^2 - x*y + 1".
// Variables: x, y, z, w (first four coordinates) or x0 .. x7. Division is
// allowed by constants only.
Polynomial parse_polynomial(std::string_view text, int dim);

}  // namespace crfe
