#include "zonogon/front.hpp"

#include <algorithm>
#include <stdexcept>

namespace zonogon {

WireTable WireTable::build(const Multiplicities& mult) {
  if (!mult.valid()) throw std::invalid_argument("invalid multiplicities");
  WireTable wt;
  wt.k = mult.k;
  wt.mult = mult;
  for (DirectionIndex d : slope_order(mult.k)) {
    for (int c = 1; c <= mult.m[d - 1]; ++c) {
      wt.dir.push_back(d);
      wt.cls.push_back(c);
      wt.rank.push_back(slope_rank(mult.k, d));
    }
  }
  return wt;
}

Front initial_front(const WireTable& wt) {
  Front f;
  f.wires.resize(wt.total());
  for (int i = 0; i < wt.total(); ++i) f.wires[i] = i;
  return f;
}

Front final_front(const WireTable& wt) {
  // Reverse the rank groups but keep class order inside each group.
  Front f;
  int n = wt.total();
  int i = n;
  while (i > 0) {
    int j = i;
    while (j > 0 && wt.dir[j - 1] == wt.dir[i - 1]) --j;
    for (int w = j; w < i; ++w) f.wires.push_back(w);
    i = j;
  }
  return f;
}

bool is_final(const Front& f, const WireTable& wt) {
  return f == final_front(wt);
}

std::vector<DirectionIndex> front_directions(const Front& f, const WireTable& wt) {
  std::vector<DirectionIndex> dirs;
  dirs.reserve(f.wires.size());
  for (int w : f.wires) dirs.push_back(wt.dir[w]);
  return dirs;
}

std::vector<Move> admissible_moves(const Front& f, const WireTable& wt) {
  // Loop order yields the documented (start, len) ordering directly.
  std::vector<Move> moves;
  int n = static_cast<int>(f.wires.size());
  for (int s = 0; s < n; ++s) {
    for (int e = s + 2; e <= n; ++e) {
      if (wt.rank[f.wires[e - 2]] >= wt.rank[f.wires[e - 1]]) break;
      moves.push_back(Move{s, e - s});
    }
  }
  return moves;
}

Front apply_move_front(const Front& f, const Move& mv) {
  if (mv.start < 0 || mv.len < 2 ||
      mv.start + mv.len > static_cast<int>(f.wires.size()))
    throw std::invalid_argument("move out of range");
  Front out = f;
  std::reverse(out.wires.begin() + mv.start, out.wires.begin() + mv.start + mv.len);
  return out;
}

}  // namespace zonogon
