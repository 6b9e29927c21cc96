#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "zonogon/canon.hpp"
#include "zonogon/enumerate.hpp"

using namespace zonogon;
using zonogon::testhelp::all_tilings;
using zonogon::testhelp::mk;

namespace {

std::uint64_t engine_multi_tile_count(const Multiplicities& mult) {
  return all_tilings(mult, /*prunes=*/false).size();
}

// Counts all normal move words reaching the final front, including the
// single-tile one; mirrors the engine's recursion without its emit filter.
std::uint64_t normal_words_to_final(const Multiplicities& mult) {
  SweepBuilder b(mult);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self) -> void {
    if (b.at_final()) {
      ++count;
      return;
    }
    for (const Move& mv : b.admissible()) {
      if (!b.normal_after_history(mv)) continue;
      b.apply(mv);
      self(self);
      b.undo();
    }
  };
  rec(rec);
  return count;
}

}  // namespace

TEST_CASE("every tiling is reached by exactly one normal word") {
  for (auto mult : {mk(2, {1, 1}), mk(3, {1, 1, 1}), mk(3, {2, 1, 1}),
                    mk(3, {1, 2, 1}), mk(3, {2, 2, 1}), mk(4, {1, 1, 1, 1}),
                    mk(4, {1, 2, 1, 1})}) {
    auto naive = oracles::naive_tiling_count(mult);
    CHECK(normal_words_to_final(mult) == naive.tilings);
    CHECK(engine_multi_tile_count(mult) == naive.multi_tile);
    CHECK(naive.sequences >= naive.tilings);
  }
}

TEST_CASE("frozen small counts") {
  auto hexagon = oracles::naive_tiling_count(mk(3, {1, 1, 1}));
  CHECK(hexagon.multi_tile == 2);  // two 3-rhombus tilings
  CHECK(hexagon.tilings == 3);     // plus the whole hexagon as one tile
  auto octagon = oracles::naive_tiling_count(mk(4, {1, 1, 1, 1}));
  CHECK(octagon.multi_tile == 16);
  CHECK(engine_multi_tile_count(mk(4, {1, 1, 1, 1})) == 16);
  CHECK(engine_multi_tile_count(mk(2, {1, 1})) == 0);
}

TEST_CASE("disjoint moves commute to the same tiling") {
  // Front (3,4,1,2) admits the disjoint blocks [0,2) and [2,4); both orders
  // glue the same two tiles, so only one word is normal and the engine
  // reports one tiling, while raw sequences see two.
  Multiplicities mult = mk(4, {1, 1, 1, 1});
  WireTable wt = WireTable::build(mult);
  Front f = initial_front(wt);
  Front ab = apply_move_front(apply_move_front(f, Move{0, 2}), Move{2, 2});
  Front ba = apply_move_front(apply_move_front(f, Move{2, 2}), Move{0, 2});
  CHECK(ab == ba);
  SweepBuilder b(mult);
  b.apply(Move{0, 2});
  CHECK(b.normal_after_history(Move{2, 2}));
  SweepBuilder b2(mult);
  b2.apply(Move{2, 2});
  CHECK_FALSE(b2.normal_after_history(Move{0, 2}));
}

TEST_CASE("prunes never change the set of irreducible classes") {
  SearchConfig pruned;
  SearchConfig plain;
  plain.prune_pair_convex = false;
  plain.prune_closure = false;
  for (auto mult : {mk(3, {1, 1, 1}), mk(3, {2, 2, 1}), mk(3, {3, 2, 2}),
                    mk(4, {1, 1, 1, 1}), mk(4, {2, 1, 1, 1})}) {
    ClassSet a = enumerate_irreducible_classes(mult, pruned);
    ClassSet s = enumerate_irreducible_classes(mult, plain);
    CHECK(a.irreducible == s.irreducible);
    std::set<std::string> ca, cs;
    for (const auto& [code, entry] : a.by_code) ca.insert(code);
    for (const auto& [code, entry] : s.by_code) cs.insert(code);
    CHECK(ca == cs);
  }
}

TEST_CASE("canonical multiplicity vectors tile the full cube") {
  for (int k : {2, 3, 4}) {
    auto canon = canonical_multiplicity_vectors(k);
    for (const auto& mult : canon) CHECK(mult.valid());
    // Walk the whole cube {1..2k-3}^k and match each vector to exactly one
    // canonical representative via the dihedral action.
    int cap = 2 * k - 3;
    std::set<std::vector<int>> canon_set;
    for (const auto& mult : canon) canon_set.insert(mult.m);
    CHECK(canon_set.size() == canon.size());
    std::vector<int> m(k, 1);
    std::uint64_t covered = 0;
    while (true) {
      std::vector<int> best;
      for (int r = 0; r < k; ++r) {
        std::vector<int> rot(k), rev(k);
        for (int i = 0; i < k; ++i) rot[i] = m[(i + r) % k];
        for (int i = 0; i < k; ++i) rev[i] = rot[k - 1 - i];
        if (best.empty() || rot < best) best = rot;
        if (rev < best) best = rev;
      }
      CHECK(canon_set.count(best) == 1);
      ++covered;
      int pos = k - 1;
      while (pos >= 0 && m[pos] == cap) m[pos--] = 1;
      if (pos < 0) break;
      ++m[pos];
    }
    std::uint64_t cube = 1;
    for (int i = 0; i < k; ++i) cube *= cap;
    CHECK(covered == cube);
  }
  CHECK(canonical_multiplicity_vectors(2).size() == 1);
  CHECK(canonical_multiplicity_vectors(3).size() == 10);
  CHECK(canonical_multiplicity_vectors(4).size() == 120);
}

TEST_CASE("hexagon classes across all vectors") {
  SearchConfig cfg;
  ClassSet set = enumerate_irreducible_classes(3, cfg, 2);
  CHECK(set.by_code.size() == 6);
  ClassSet serial = enumerate_irreducible_classes(3, cfg, 1);
  CHECK(serial.by_code.size() == 6);
  std::set<std::string> pa, ps;
  for (const auto& [code, entry] : set.by_code) pa.insert(code);
  for (const auto& [code, entry] : serial.by_code) ps.insert(code);
  CHECK(pa == ps);
  // The base vector contributes exactly one class: the 3-rhombus fan around
  // the center vertex. Every pair union there has a reflex angle at the
  // center, so both tilings are irreducible, and they are mirror images.
  ClassSet base = enumerate_irreducible_classes(mk(3, {1, 1, 1}), cfg);
  CHECK(base.by_code.size() == 1);
  CHECK(base.emitted == 2);
  CHECK(base.irreducible == 2);
  CHECK(base.by_code.begin()->second.tilings == 2);
}

TEST_CASE("max solutions stops the sweep early") {
  SearchConfig cfg;
  cfg.prune_pair_convex = false;
  cfg.prune_closure = false;
  cfg.max_solutions = 3;
  std::uint64_t seen = 0;
  enumerate_tilings(mk(4, {1, 1, 1, 1}), cfg,
                    [&](const TilingComplex&, const std::vector<Move>&) {
                      ++seen;
                      return true;
                    });
  CHECK(seen == 3);
}
