#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zonogon/complex.hpp"

namespace zonogon {

struct ClassReport {
  std::string code;                        // canonical code, lowercase hex
  std::string type_string;                 // "k1/k2/.../kk", dihedral lex-min
  std::string case_label;                  // "I".."IX" when k == 4, else empty
  std::map<int, int> census;               // tile side count -> tiles
  std::vector<std::string> side_profiles;  // per side E_1..E_2k, hex
};

// Lexicographically least vector under cyclic shifts and reversal.
std::vector<int> dihedral_reduced(const std::vector<int>& m);

std::string type_string_of(const TilingComplex& c);

// Case partition of a mirrored 2k side-type signature, k = 4 only.
std::string case_of(const std::vector<int>& signature, int k);

std::map<int, int> tile_census(const TilingComplex& c);

ClassReport class_report(const TilingComplex& c);

// Observed side-neighborhood table across class representatives: for every
// side with >= 3 edges, its profile and the edge counts of the two
// neighboring sides.
struct NeighborTable {
  struct Row {
    int side_edges = 0;
    std::vector<std::pair<int, int>> neighbor_types;  // sorted, deduped
  };
  std::map<std::string, Row> rows;  // profile hex -> observations
};

NeighborTable neighbor_table(const std::vector<TilingComplex>& reps);

}  // namespace zonogon
