#pragma once

#include <string>
#include <vector>

#include "zonogon/builder.hpp"
#include "zonogon/enumerate.hpp"

namespace zonogon::testhelp {

inline Multiplicities mk(int k, std::vector<int> m) {
  return Multiplicities{k, std::move(m)};
}

inline TilingComplex build_from_moves(const Multiplicities& mult,
                                      const std::vector<Move>& moves) {
  SweepBuilder b(mult);
  for (const Move& mv : moves) b.apply(mv);
  return b.snapshot();
}

// Every finished multi-tile sweep, as snapshots, in search order.
inline std::vector<TilingComplex> all_tilings(const Multiplicities& mult,
                                              bool prunes = false) {
  SearchConfig cfg;
  cfg.prune_pair_convex = prunes;
  cfg.prune_closure = prunes;
  std::vector<TilingComplex> out;
  enumerate_tilings(mult, cfg,
                    [&](const TilingComplex& c, const std::vector<Move>&) {
                      out.push_back(c);
                      return true;
                    });
  return out;
}

inline std::vector<TilingComplex> class_reps(int k, int jobs = 1) {
  SearchConfig cfg;
  ClassSet set = enumerate_irreducible_classes(k, cfg, jobs);
  std::vector<TilingComplex> reps;
  reps.reserve(set.by_code.size());
  for (const auto& [code, entry] : set.by_code) reps.push_back(entry.rep);
  return reps;
}

}  // namespace zonogon::testhelp
