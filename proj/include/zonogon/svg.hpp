#pragma once

#include <array>
#include <string>
#include <vector>

#include "zonogon/complex.hpp"

namespace zonogon {

// Vertex coordinates under the canonical embedding: direction i travels at
// angle (i-1)pi/k with length 1/m_i. The only floating point in the
// project; throws std::runtime_error if the edge vectors are inconsistent
// beyond 1e-9.
std::vector<std::array<double, 2>> embed_vertices(const TilingComplex& c);

// SVG 1.1 document, faces colored by side count, y axis flipped to match
// the mathematical orientation.
std::string render_svg(const TilingComplex& c);

}  // namespace zonogon
