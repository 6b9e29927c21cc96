#pragma once

#include <vector>

#include "zonogon/complex.hpp"
#include "zonogon/front.hpp"

namespace zonogon {

// Incremental sweep construction. The lower boundary chain is laid first;
// every move glues one zonogon tile onto the front (block reversal); the
// complex is finished when the front reaches the upper chain arrangement.
//
// Invariants maintained across apply/undo:
//  - front edges are oriented along the path and have no face on their left;
//  - initial chain edges keep no face on their right (the exterior);
//  - per-vertex rotations stay sorted by travel angle.
class SweepBuilder {
 public:
  explicit SweepBuilder(const Multiplicities& mult);

  const WireTable& wires() const { return wt_; }
  const Front& front() const { return front_; }
  bool at_final() const;
  std::vector<Move> admissible() const { return admissible_moves(front_, wt_); }

  // Applies an admissible move and returns the new face id.
  int apply(const Move& mv);
  void undo();
  int moves_applied() const { return static_cast<int>(history_.size()); }
  const std::vector<Move>& history() const { return history_; }

  // True when appending mv keeps the move word lexicographically normal:
  // scanning earlier moves backward over disjoint intervals, mv must never
  // start left of one of them. Every tiling has exactly one normal word.
  bool normal_after_history(const Move& mv) const;

  // Read-only views of the partial complex.
  const TilingComplex& partial() const { return cx_; }
  const std::vector<std::vector<Dart>>& rotations() const { return rot_; }

  // A vertex is settled when no future tile can add angle at it: it left the
  // front, or it is a path endpoint whose corner angle is already full.
  bool vertex_settled(int v) const;

  // Finished complex with boundary sides and vertex roles filled in.
  // Requires at_final().
  TilingComplex snapshot() const;

 private:
  struct UndoRec {
    Move mv;
    std::vector<int> mid_verts;     // replaced interior path vertices
    std::vector<int> bottom_edges;  // edges the tile was glued onto
  };

  void rot_insert(int v, Dart d);
  void rot_erase(int v, Dart d);

  WireTable wt_;
  Front front_;
  TilingComplex cx_;
  std::vector<int> front_edges_;  // exposed edge per front position
  std::vector<int> front_verts_;  // path vertices, size n+1
  std::vector<std::vector<Dart>> rot_;
  std::vector<char> in_front_;
  std::vector<int> angle_sum_;    // placed interior angle per vertex
  std::vector<Move> history_;
  std::vector<UndoRec> undo_;
};

}  // namespace zonogon
