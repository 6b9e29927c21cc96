#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "zonogon/front.hpp"

using namespace zonogon;
using zonogon::testhelp::mk;

namespace {

std::vector<DirectionIndex> dirs_of(const Front& f, const WireTable& wt) {
  return front_directions(f, wt);
}

}  // namespace

TEST_CASE("boundary chains for the base vectors") {
  WireTable w3 = WireTable::build(mk(3, {1, 1, 1}));
  CHECK(dirs_of(initial_front(w3), w3) == std::vector<DirectionIndex>{3, 1, 2});
  CHECK(dirs_of(final_front(w3), w3) == std::vector<DirectionIndex>{2, 1, 3});

  WireTable w4 = WireTable::build(mk(4, {1, 1, 1, 1}));
  CHECK(dirs_of(initial_front(w4), w4) ==
        std::vector<DirectionIndex>{3, 4, 1, 2});
  CHECK(dirs_of(final_front(w4), w4) ==
        std::vector<DirectionIndex>{2, 1, 4, 3});

  WireTable w2 = WireTable::build(mk(2, {1, 1}));
  CHECK(dirs_of(initial_front(w2), w2) == std::vector<DirectionIndex>{2, 1});
  CHECK(dirs_of(final_front(w2), w2) == std::vector<DirectionIndex>{1, 2});
}

TEST_CASE("repeated directions keep ascending classes") {
  WireTable wt = WireTable::build(mk(4, {2, 1, 1, 1}));
  CHECK(dirs_of(initial_front(wt), wt) ==
        std::vector<DirectionIndex>{3, 4, 1, 1, 2});
  Front f = initial_front(wt);
  // The two direction-1 wires appear with class 1 before class 2.
  std::vector<int> classes;
  for (int w : f.wires)
    if (wt.dir[w] == 1) classes.push_back(wt.cls[w]);
  CHECK(classes == std::vector<int>{1, 2});
  // Final front reverses rank groups but not classes within a group.
  Front g = final_front(wt);
  classes.clear();
  for (int w : g.wires)
    if (wt.dir[w] == 1) classes.push_back(wt.cls[w]);
  CHECK(classes == std::vector<int>{1, 2});
}

TEST_CASE("admissible blocks of the hexagon base front") {
  WireTable wt = WireTable::build(mk(3, {1, 1, 1}));
  Front f = initial_front(wt);
  auto moves = admissible_moves(f, wt);
  REQUIRE(moves.size() == 3);
  std::set<std::vector<DirectionIndex>> blocks;
  for (const Move& mv : moves) {
    std::vector<DirectionIndex> block;
    for (int i = mv.start; i < mv.start + mv.len; ++i)
      block.push_back(wt.dir[f.wires[i]]);
    blocks.insert(block);
  }
  CHECK(blocks == std::set<std::vector<DirectionIndex>>{
                      {3, 1}, {1, 2}, {3, 1, 2}});
  // Moves come out ordered by (start, len).
  CHECK(moves[0] == Move{0, 2});
  CHECK(moves[1] == Move{0, 3});
  CHECK(moves[2] == Move{1, 2});
}

TEST_CASE("applying moves reverses blocks") {
  WireTable wt = WireTable::build(mk(3, {1, 1, 1}));
  Front f = initial_front(wt);
  Front g = apply_move_front(f, Move{0, 2});
  CHECK(dirs_of(g, wt) == std::vector<DirectionIndex>{1, 3, 2});
  CHECK_FALSE(is_final(g, wt));
  Front h = apply_move_front(f, Move{0, 3});
  CHECK(dirs_of(h, wt) == std::vector<DirectionIndex>{2, 1, 3});
  CHECK(is_final(h, wt));
  CHECK(apply_move_front(g, Move{0, 2}) == f);
  CHECK_THROWS(apply_move_front(f, Move{2, 2}));
  CHECK_THROWS(apply_move_front(f, Move{0, 1}));
}

TEST_CASE("admissible blocks always ascend in slope rank") {
  for (auto mult : {mk(4, {2, 1, 2, 1}), mk(3, {3, 1, 2}), mk(4, {1, 1, 1, 1})}) {
    WireTable wt = WireTable::build(mult);
    Front f = initial_front(wt);
    for (const Move& mv : admissible_moves(f, wt)) {
      CHECK(mv.len >= 2);
      for (int i = mv.start + 1; i < mv.start + mv.len; ++i)
        CHECK(wt.rank[f.wires[i - 1]] < wt.rank[f.wires[i]]);
    }
  }
}

TEST_CASE("final front admits no moves") {
  for (auto mult : {mk(2, {1, 1}), mk(3, {2, 2, 1}), mk(4, {1, 2, 1, 1})}) {
    WireTable wt = WireTable::build(mult);
    CHECK(admissible_moves(final_front(wt), wt).empty());
    CHECK_FALSE(admissible_moves(initial_front(wt), wt).empty());
  }
}
