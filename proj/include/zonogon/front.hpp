#pragma once

#include <vector>

#include "zonogon/directions.hpp"

namespace zonogon {

// Wires are the edge classes of a decomposition: chains of parallel translated
// edges crossing from one side of P to the opposite one. Wire ids are the
// 0-based positions in the initial front.
struct WireTable {
  int k = 0;
  Multiplicities mult;
  std::vector<DirectionIndex> dir;  // per wire
  std::vector<int> cls;             // class index 1..m[dir-1], per wire
  std::vector<int> rank;            // slope_rank(k, dir), per wire

  static WireTable build(const Multiplicities& mult);
  int total() const { return static_cast<int>(dir.size()); }
};

// A front lists every wire exactly once, left to right along the sweep path.
struct Front {
  std::vector<int> wires;

  bool operator==(const Front&) const = default;
};

// Lower boundary chain: wires by ascending slope rank, classes ascending.
Front initial_front(const WireTable& wt);

// Upper boundary chain: ranks descending, classes still ascending.
Front final_front(const WireTable& wt);

bool is_final(const Front& f, const WireTable& wt);

std::vector<DirectionIndex> front_directions(const Front& f, const WireTable& wt);

// A move reverses the block of positions [start, start+len). Admissible
// blocks have strictly ascending slope ranks, hence pairwise distinct
// directions; the reversal glues one zonogon tile onto the front.
struct Move {
  int start = 0;
  int len = 0;

  bool operator==(const Move&) const = default;
};

// All admissible moves, ordered by (start, len).
std::vector<Move> admissible_moves(const Front& f, const WireTable& wt);

// Block reversal only; the complex-building part lives in SweepBuilder.
Front apply_move_front(const Front& f, const Move& mv);

}  // namespace zonogon
