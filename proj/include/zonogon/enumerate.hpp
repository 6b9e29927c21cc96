#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zonogon/builder.hpp"

namespace zonogon {

struct SearchConfig {
  bool prune_pair_convex = true;
  bool prune_closure = true;
  std::optional<std::uint64_t> max_solutions;
  std::function<void(std::uint64_t nodes, std::uint64_t emitted)> progress_hook;
  std::uint64_t progress_interval = 1u << 18;
};

// Depth-first sweep over lexicographically normal move words. Every
// edge-to-edge decomposition with >= 2 tiles and the given multiplicities is
// emitted exactly once (disjoint moves commute; each tiling has exactly one
// normal word and prefixes of normal words are normal). The sink may return
// false to stop early. Prunes drop branches whose placed tiles already
// contain a convex witness; they never drop an irreducible completion.
void enumerate_tilings(
    const Multiplicities& mult, const SearchConfig& cfg,
    const std::function<bool(const TilingComplex&, const std::vector<Move>&)>& sink);

struct ClassEntry {
  TilingComplex rep;
  std::vector<Move> rep_word;
  std::uint64_t tilings = 0;  // irreducible tilings carrying this code
};

struct ClassSet {
  std::map<std::string, ClassEntry> by_code;  // canonical code hex -> entry
  std::uint64_t emitted = 0;                  // multi-tile tilings seen
  std::uint64_t irreducible = 0;
};

// One representative per orbit of the dihedral relabeling action on
// multiplicity vectors in {1..2k-3}^k: lexicographically minimal among all
// rotations of the vector and of its reversal, listed in ascending order.
std::vector<Multiplicities> canonical_multiplicity_vectors(int k);

// Enumerate, filter irreducible, dedupe by canonical code. The stored
// representative is the first in the total order (multiplicities, move word).
ClassSet enumerate_irreducible_classes(const Multiplicities& mult,
                                       const SearchConfig& cfg);

// All canonical multiplicity vectors of one k, optionally across threads.
// The merged result does not depend on scheduling.
ClassSet enumerate_irreducible_classes(int k, const SearchConfig& cfg,
                                       int jobs = 1);

void merge_class_sets(ClassSet& into, ClassSet&& from);

}  // namespace zonogon
