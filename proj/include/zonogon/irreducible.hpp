#pragma once

#include <utility>
#include <vector>

#include "zonogon/complex.hpp"

namespace zonogon {

struct ClosureResult {
  std::vector<int> tiles;  // sorted face ids
  bool convex = false;
  bool is_whole = false;
  // Growth required angle that is not backed by placed faces (possible on
  // partial sweeps and on seeds pinched against the outer boundary); no
  // convex witness is certifiable from this seed.
  bool aborted = false;
};

// Interior angle of face f at vertex v, in units of pi/k.
int face_angle_at(const TilingComplex& c, int f, int v);

// True iff the union of tiles is a single boundary cycle with every visit
// angle at most pi. Throws if tiles is empty or not edge-connected.
bool union_is_convex(const TilingComplex& c,
                     const std::vector<std::vector<Dart>>& rot,
                     const std::vector<int>& tiles);

// Minimal convex tile-union containing the adjacent seed pair, grown by
// forced additions: a gap of placed faces narrower than pi at a boundary
// vertex of the union must be swallowed, and enclosed face components must
// be filled. Works on finished and partial complexes alike; sectors without
// a face (the exterior, or the unswept region mid-sweep) are unfillable.
ClosureResult convex_closure(const TilingComplex& c,
                             const std::vector<std::vector<Dart>>& rot,
                             int fa, int fb);

// Reducible iff some adjacent pair closes to a convex proper union of >= 2
// tiles. Returns that witness, or an empty vector when irreducible.
std::pair<bool, std::vector<int>> is_irreducible(const TilingComplex& c);

// Prune test used during the sweep: does the freshly glued face certify a
// reducibility witness among the placed tiles? Sound for any completion,
// because tiles only get added as the sweep continues.
bool witness_after_gluing(const TilingComplex& partial,
                          const std::vector<std::vector<Dart>>& rot,
                          int new_face, bool pair_check, bool closure_check);

}  // namespace zonogon
