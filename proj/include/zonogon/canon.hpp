#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zonogon/complex.hpp"

namespace zonogon {

using CanonicalCode = std::vector<std::uint8_t>;

// Codes are equal iff the face lattices are isomorphic; for disk-like
// complexes that is planar-map isomorphism up to reflection. The code is the
// lexicographic minimum of breadth-first encodings rooted at every dart,
// scanning each vertex rotation in both senses.
CanonicalCode canonical_code(const TilingComplex& c);

std::string code_hex(const CanonicalCode& code);

// Canonical code of the sub-complex of all tiles meeting side E_j (sharing
// at least a point with it, j in 1..2k). The code depends only on that
// sub-complex, so congruent configurations, including mirror images, get
// one profile.
CanonicalCode side_profile(const TilingComplex& c, int side);

}  // namespace zonogon
