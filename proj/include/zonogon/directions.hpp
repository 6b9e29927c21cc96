#pragma once

#include <vector>

namespace zonogon {

// Directions are indexed 1..k; direction i is the family of lines at angle
// (i-1)*pi/k. All angles in the core are integers in units of pi/k.
using DirectionIndex = int;

struct Multiplicities {
  int k = 0;
  std::vector<int> m;  // m[i-1] = number of edge classes of direction i

  int total() const;
  bool valid() const;  // k >= 2, size k, each entry in 1..2k-3
};

// Signed travel angle of direction d after an infinitesimal clockwise
// rotation, so a vertical direction ranks lowest. Result lies in
// [-floor(k/2), ceil(k/2)-1].
int phi_units(int k, DirectionIndex d);

// Directions sorted by ascending phi_units.
std::vector<DirectionIndex> slope_order(int k);

// 0-based position of d in slope_order(k).
int slope_rank(int k, DirectionIndex d);

// Direction of boundary side E_j, j = 1..2k counterclockwise.
DirectionIndex side_direction(int k, int j);

// Side index (1..2k) of the side of direction d on the lower boundary chain.
int lower_chain_side(int k, DirectionIndex d);

// Interior angles, in units of pi/k, of the zonogon spanned by one segment
// per listed direction, in cyclic order. Length 2*|dirs|, entries in 1..k-1,
// sum (2|dirs|-2)*k.
std::vector<int> zonogon_angles(int k, std::vector<DirectionIndex> dirs);

}  // namespace zonogon
